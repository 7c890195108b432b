#include "tsrg/miner.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tsrg {

namespace {

bool passes(const ItemPredicate& filter, const Item& x) {
    return !filter || filter(x);
}

// Emitted-rule registry; the final sort restores determinism regardless of
// discovery order.
struct RuleSink {
    std::vector<Rule> rules;
    std::unordered_set<std::string> keys;

    void emit(Rule rule) {
        if (keys.insert(canonical_rule_key(rule)).second) rules.push_back(std::move(rule));
    }
};

void emit_if_interesting(const ExpansionState& state, const TimeSeries& ts,
                         const MiningParams& params, RuleSink& sink) {
    const double n = static_cast<double>(ts.size());
    InterestInputs in;
    in.cond_rel = static_cast<double>(state.condition_support) / n;
    in.pred_rel = static_cast<double>(state.prediction_support) / n;
    in.rule_rel = static_cast<double>(state.support) / n;
    // An undefined measure (e.g. netconf with relSup(E_c)=1) means the rule
    // cannot clear the threshold.
    auto interest = try_evaluate_measure(params.measure, in);
    if (!interest || *interest < params.min_int) return;
    sink.emit(Rule{state.condition, state.prediction, state.support, in.rule_rel, *interest});
}

ExpansionState extended_state(const ExpansionState& base, SideExtension&& ext, bool grow_condition,
                              const TimeSeries& ts, const MiningParams& params) {
    ExpansionState next;
    next.condition = base.condition;
    next.prediction = base.prediction;
    next.occurrences = std::move(ext.occurrences);
    next.support = ext.support;
    if (grow_condition) {
        next.condition.add(ext.item);
        next.condition_support = count_multiset_support(next.condition, ts, params.window);
        next.prediction_support = base.prediction_support;
    } else {
        next.prediction.add(ext.item);
        next.condition_support = base.condition_support;
        next.prediction_support = count_multiset_support(next.prediction, ts, params.window);
    }
    return next;
}

void expand_condition_impl(const ExpansionState& state, const TimeSeries& ts,
                           const MiningParams& params, RuleSink& sink) {
    if (state.condition.size() >= params.max_condition_size) return;
    for (SideExtension& ext : condition_extensions(state, ts, params)) {
        if (ext.support < params.min_sup) continue;
        ExpansionState next = extended_state(state, std::move(ext), true, ts, params);
        expand_condition_impl(next, ts, params, sink);
        emit_if_interesting(next, ts, params, sink);
    }
}

void expand_prediction_impl(const ExpansionState& state, const TimeSeries& ts,
                            const MiningParams& params, RuleSink& sink) {
    if (state.prediction.size() >= params.max_prediction_size) return;
    for (SideExtension& ext : prediction_extensions(state, ts, params)) {
        if (ext.support < params.min_sup) continue;
        ExpansionState next = extended_state(state, std::move(ext), false, ts, params);
        expand_condition_impl(next, ts, params, sink);
        expand_prediction_impl(next, ts, params, sink);
        emit_if_interesting(next, ts, params, sink);
    }
}

// Shared zone-scan machinery for both sides. `grow_condition` selects the
// side being grown, its filter and its zone.
std::vector<SideExtension> side_extensions(const ExpansionState& state, const TimeSeries& ts,
                                           const MiningParams& params, bool grow_condition) {
    const Multiset& side = grow_condition ? state.condition : state.prediction;
    const ItemPredicate& filter =
        grow_condition ? params.condition_filter : params.prediction_filter;
    const Item& gate = side.max_item();

    std::map<Item, std::vector<RuleOccurrence>> candidates;
    for (const RuleOccurrence& occ : state.occurrences) {
        const SearchZones zones = search_zones(occ, params.window);
        std::size_t lo, hi;
        if (grow_condition) {
            lo = ts.first_at_or_after(zones.condition_begin);
            hi = ts.first_at_or_after(zones.condition_end);
        } else {
            lo = ts.first_after(zones.prediction_begin);
            hi = ts.first_after(zones.prediction_end);
        }
        const OccurrenceMap& grown_map = grow_condition ? occ.condition : occ.prediction;
        for (std::size_t e = lo; e < hi; ++e) {
            const Entry& entry = ts.entries[e];
            auto first = std::lower_bound(entry.items.begin(), entry.items.end(), gate);
            for (auto it = first; it != entry.items.end(); ++it) {
                const Item& k = *it;
                if (!passes(filter, k)) continue;
                if (k == gate && entry.time <= grown_map.at(gate).back()) continue;
                RuleOccurrence extended = occ;
                occurrence_add(grow_condition ? extended.condition : extended.prediction, k,
                               entry.time);
                candidates[k].push_back(std::move(extended));
            }
        }
    }

    std::vector<SideExtension> result;
    result.reserve(candidates.size());
    for (auto& [k, occs] : candidates) {
        std::sort(occs.begin(), occs.end(), canonical_occurrence_less);
        occs.erase(std::unique(occs.begin(), occs.end()), occs.end());
        const int sup = count_distinct_occurrences(occs);
        result.push_back(SideExtension{k, std::move(occs), sup});
    }
    return result;
}

void validate(const TimeSeries& ts, const MiningParams& params) {
    if (ts.empty()) throw std::invalid_argument("mine: empty time series");
    if (params.window <= 0) throw std::invalid_argument("mine: window must be positive");
    if (params.min_sup < 1) throw std::invalid_argument("mine: min_sup must be >= 1");
    if (!min_interest_in_codomain(params.measure, params.min_int))
        throw std::invalid_argument("mine: min_int outside the measure's codomain");
    if (params.max_condition_size < 1 || params.max_prediction_size < 1)
        throw std::invalid_argument("mine: size caps must be >= 1");
}

void sort_rules(std::vector<Rule>& rules) {
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(rules.size());
    for (std::size_t idx = 0; idx < rules.size(); ++idx)
        order.emplace_back(canonical_rule_key(rules[idx]), idx);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        const Rule& ra = rules[a.second];
        const Rule& rb = rules[b.second];
        if (ra.interest != rb.interest) return ra.interest > rb.interest;
        if (ra.support != rb.support) return ra.support > rb.support;
        return a.first < b.first;
    });
    std::vector<Rule> sorted;
    sorted.reserve(rules.size());
    for (const auto& [key, idx] : order) sorted.push_back(std::move(rules[idx]));
    rules = std::move(sorted);
}

}  // namespace

SearchZones search_zones(const RuleOccurrence& occ, Duration window) {
    SearchZones z;
    z.condition_begin = occ.prediction_max() - window;
    z.condition_end = occ.prediction_min();
    z.prediction_begin = occ.condition_max();
    z.prediction_end = occ.condition_min() + window;
    return z;
}

std::vector<SideExtension> condition_extensions(const ExpansionState& state, const TimeSeries& ts,
                                                const MiningParams& params) {
    return side_extensions(state, ts, params, true);
}

std::vector<SideExtension> prediction_extensions(const ExpansionState& state, const TimeSeries& ts,
                                                 const MiningParams& params) {
    return side_extensions(state, ts, params, false);
}

std::vector<Rule> expand_condition(const ExpansionState& state, const TimeSeries& ts,
                                   const MiningParams& params) {
    RuleSink sink;
    expand_condition_impl(state, ts, params, sink);
    sort_rules(sink.rules);
    return std::move(sink.rules);
}

std::vector<Rule> expand_prediction(const ExpansionState& state, const TimeSeries& ts,
                                    const MiningParams& params) {
    RuleSink sink;
    expand_prediction_impl(state, ts, params, sink);
    sort_rules(sink.rules);
    return std::move(sink.rules);
}

std::vector<Rule> mine(const TimeSeries& ts, const MiningParams& params) {
    validate(ts, params);

    // One pass: timestamps of the itemsets containing each item.
    std::map<Item, std::vector<Timestamp>> times;
    for (const Entry& e : ts.entries)
        for (const Item& x : e.items) times[x].push_back(e.time);

    // Only items frequent enough to carry a rule can seed one.
    std::vector<const Item*> cond_items, pred_items;
    for (const auto& [item, stamps] : times) {
        if (static_cast<int>(stamps.size()) < params.min_sup) continue;
        if (passes(params.condition_filter, item)) cond_items.push_back(&item);
        if (passes(params.prediction_filter, item)) pred_items.push_back(&item);
    }

    RuleSink sink;
    for (const Item* i : cond_items) {
        for (const Item* j : pred_items) {
            SupportResult basic = basic_rule_support(times[*i], times[*j], *i, *j, params.window);
            if (basic.support < params.min_sup) continue;

            ExpansionState state;
            state.condition.add(*i);
            state.prediction.add(*j);
            state.occurrences = std::move(basic.occurrences);
            state.support = basic.support;
            state.condition_support = static_cast<int>(times[*i].size());
            state.prediction_support = static_cast<int>(times[*j].size());

            expand_condition_impl(state, ts, params, sink);
            expand_prediction_impl(state, ts, params, sink);
            emit_if_interesting(state, ts, params, sink);
        }
    }

    sort_rules(sink.rules);
    return std::move(sink.rules);
}

}  // namespace tsrg
