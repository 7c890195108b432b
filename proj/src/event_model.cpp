#include "tsrg/event_model.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tsrg {

std::size_t TimeSeries::first_at_or_after(Timestamp t) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), t,
                               [](const Entry& e, Timestamp v) { return e.time < v; });
    return static_cast<std::size_t>(it - entries.begin());
}

std::size_t TimeSeries::first_after(Timestamp t) const {
    auto it = std::upper_bound(entries.begin(), entries.end(), t,
                               [](Timestamp v, const Entry& e) { return v < e.time; });
    return static_cast<std::size_t>(it - entries.begin());
}

Multiset::Multiset(std::initializer_list<Item> items) {
    for (const Item& x : items) add(x);
}

std::size_t Multiset::size() const {
    std::size_t total = 0;
    for (const auto& [item, mult] : counts) total += static_cast<std::size_t>(mult);
    return total;
}

int Multiset::multiplicity(const Item& x) const {
    auto it = counts.find(x);
    return it == counts.end() ? 0 : it->second;
}

const Item& Multiset::max_item() const {
    if (counts.empty()) throw std::invalid_argument("max_item of empty multiset");
    return counts.rbegin()->first;
}

void Multiset::add(const Item& x, int times) {
    if (times < 1) throw std::invalid_argument("multiplicity increment must be >= 1");
    counts[x] += times;
}

namespace {

Timestamp side_min(const OccurrenceMap& side) {
    Timestamp best = std::numeric_limits<Timestamp>::max();
    for (const auto& [item, times] : side)
        if (!times.empty()) best = std::min(best, times.front());
    return best;
}

Timestamp side_max(const OccurrenceMap& side) {
    Timestamp best = std::numeric_limits<Timestamp>::min();
    for (const auto& [item, times] : side)
        if (!times.empty()) best = std::max(best, times.back());
    return best;
}

}  // namespace

Timestamp RuleOccurrence::condition_min() const { return side_min(condition); }
Timestamp RuleOccurrence::condition_max() const { return side_max(condition); }
Timestamp RuleOccurrence::prediction_min() const { return side_min(prediction); }
Timestamp RuleOccurrence::prediction_max() const { return side_max(prediction); }
Timestamp RuleOccurrence::min_time() const { return std::min(side_min(condition), side_min(prediction)); }
Timestamp RuleOccurrence::max_time() const { return std::max(side_max(condition), side_max(prediction)); }

void occurrence_add(OccurrenceMap& side, const Item& x, Timestamp t) {
    auto& slot = side[x];
    slot.insert(std::upper_bound(slot.begin(), slot.end(), t), t);
}

TimeSeries build_time_series(const std::vector<std::pair<Timestamp, Item>>& events) {
    std::map<Timestamp, std::vector<Item>> grouped;
    for (const auto& [t, item] : events) grouped[t].push_back(item);

    TimeSeries ts;
    ts.entries.reserve(grouped.size());
    for (auto& [t, items] : grouped) {
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        ts.entries.push_back(Entry{t, std::move(items)});
    }
    return ts;
}

std::string multiset_key(const Multiset& ms) {
    std::string out;
    bool first = true;
    for (const auto& [item, mult] : ms.counts) {
        if (!first) out += ',';
        first = false;
        out += item;
        out += ':';
        out += std::to_string(mult);
    }
    return out;
}

std::string canonical_rule_key(const Multiset& condition, const Multiset& prediction) {
    return multiset_key(condition) + "=>" + multiset_key(prediction);
}

std::string canonical_rule_key(const Rule& rule) {
    return canonical_rule_key(rule.condition, rule.prediction);
}

}  // namespace tsrg
