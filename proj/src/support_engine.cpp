#include "tsrg/support_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsrg {

int item_support(const TimeSeries& ts, const Item& x) {
    int count = 0;
    for (const Entry& e : ts.entries)
        if (std::binary_search(e.items.begin(), e.items.end(), x)) ++count;
    return count;
}

int count_multiset_support(const Multiset& A, const TimeSeries& ts, Duration window) {
    if (A.empty()) throw std::invalid_argument("count_multiset_support: empty multiset");
    if (window < 0) throw std::invalid_argument("count_multiset_support: negative window");

    Blacklist consumed;
    std::map<Item, std::vector<Timestamp>> seen;  // per window position
    int sup = 0;

    const std::size_t n = ts.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Timestamp window_end = ts.entries[k].time + window;
        for (auto& [item, times] : seen) times.clear();

        for (std::size_t z = k; z < n && ts.entries[z].time <= window_end; ++z) {
            const Entry& e = ts.entries[z];
            for (const auto& [item, mult] : A.counts)
                if (std::binary_search(e.items.begin(), e.items.end(), item))
                    seen[item].push_back(e.time);
        }

        bool distinct = true;
        for (const auto& [item, mult] : A.counts) {
            auto& candidates = seen[item];
            const auto& black = consumed[item];
            std::erase_if(candidates, [&](Timestamp t) { return black.count(t) != 0; });
            if (candidates.size() < static_cast<std::size_t>(mult)) {
                distinct = false;
                break;
            }
        }

        if (distinct) {
            ++sup;
            for (const auto& [item, mult] : A.counts) {
                const auto& candidates = seen[item];
                // candidates are scanned in entry order, so oldest first
                for (int m = 0; m < mult; ++m) consumed[item].insert(candidates[m]);
            }
        }
    }
    return sup;
}

SupportResult basic_rule_support(const std::vector<Timestamp>& cond_times,
                                 const std::vector<Timestamp>& pred_times,
                                 const Item& i, const Item& j, Duration window) {
    SupportResult result;
    Blacklist cond_bl, pred_bl;

    for (Timestamp ti : cond_times) {
        auto first = std::upper_bound(pred_times.begin(), pred_times.end(), ti);
        for (auto it = first; it != pred_times.end() && *it - ti <= window; ++it) {
            RuleOccurrence occ;
            occ.condition[i] = {ti};
            occ.prediction[j] = {*it};
            if (!occurrence_blocked(occ, cond_bl, pred_bl)) {
                ++result.support;
                consume_occurrence(occ, cond_bl, pred_bl);
            }
            result.occurrences.push_back(std::move(occ));
        }
    }
    return result;
}

SupportResult basic_rule_support(const Item& i, const Item& j, const TimeSeries& ts,
                                 Duration window) {
    std::vector<Timestamp> cond_times, pred_times;
    for (const Entry& e : ts.entries) {
        if (std::binary_search(e.items.begin(), e.items.end(), i)) cond_times.push_back(e.time);
        if (std::binary_search(e.items.begin(), e.items.end(), j)) pred_times.push_back(e.time);
    }
    return basic_rule_support(cond_times, pred_times, i, j, window);
}

double relative_support(int sup, const TimeSeries& ts) {
    if (ts.empty()) throw std::invalid_argument("relative_support: empty series");
    return static_cast<double>(sup) / static_cast<double>(ts.size());
}

namespace {

bool side_blocked(const OccurrenceMap& side, const Blacklist& cond_bl, const Blacklist& pred_bl) {
    for (const auto& [item, times] : side) {
        auto c = cond_bl.find(item);
        auto p = pred_bl.find(item);
        for (Timestamp t : times) {
            if (c != cond_bl.end() && c->second.count(t)) return true;
            if (p != pred_bl.end() && p->second.count(t)) return true;
        }
    }
    return false;
}

}  // namespace

bool occurrence_blocked(const RuleOccurrence& occ, const Blacklist& cond_bl,
                        const Blacklist& pred_bl) {
    return side_blocked(occ.condition, cond_bl, pred_bl) ||
           side_blocked(occ.prediction, cond_bl, pred_bl);
}

void consume_occurrence(const RuleOccurrence& occ, Blacklist& cond_bl, Blacklist& pred_bl) {
    for (const auto& [item, times] : occ.condition)
        cond_bl[item].insert(times.begin(), times.end());
    for (const auto& [item, times] : occ.prediction)
        pred_bl[item].insert(times.begin(), times.end());
}

int count_distinct_occurrences(const std::vector<RuleOccurrence>& occs) {
    Blacklist cond_bl, pred_bl;
    int sup = 0;
    for (const RuleOccurrence& occ : occs) {
        if (!occurrence_blocked(occ, cond_bl, pred_bl)) {
            ++sup;
            consume_occurrence(occ, cond_bl, pred_bl);
        }
    }
    return sup;
}

bool canonical_occurrence_less(const RuleOccurrence& a, const RuleOccurrence& b) {
    const Timestamp na = a.max_time();
    const Timestamp nb = b.max_time();
    if (na != nb) return na < nb;
    if (a.condition != b.condition) return a.condition < b.condition;
    return a.prediction < b.prediction;
}

}  // namespace tsrg
