// miner.hpp - the rule miner: seed basic rules over a time series, grow them
// by adding items to the condition or prediction under a duration window,
// validate by support and interest.
//
// Duplicate avoidance follows three rules:
//   - once a condition was expanded, the prediction may not be expanded;
//   - a side only grows with items >= its greatest item (byte-wise order);
//   - when growing with an item equal to the greatest one, only timestamps
//     strictly later than that item's recorded timestamps count.
// A canonical-key registry guards the emitted list on top of those rules.
#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "tsrg/event_model.hpp"
#include "tsrg/interest.hpp"
#include "tsrg/support_engine.hpp"

namespace tsrg {

inline constexpr std::size_t kNoSizeLimit = std::numeric_limits<std::size_t>::max();

// Accepts every item when empty.
using ItemPredicate = std::function<bool(const Item&)>;

struct MiningParams {
    Duration window = 0;        // ms; must be > 0
    int min_sup = 1;            // absolute support threshold, >= 1
    double min_int = 0.0;       // interest threshold, within the measure's codomain
    Measure measure = Measure::netconf;
    ItemPredicate condition_filter;   // default: all items
    ItemPredicate prediction_filter;  // use case: actuators only
    std::size_t max_condition_size = kNoSizeLimit;   // >= 1
    std::size_t max_prediction_size = kNoSizeLimit;  // >= 1
};

// Where a rule occurrence may grow. The condition zone is the half-open
// interval [condition_begin, condition_end); the prediction zone is
// (prediction_begin, prediction_end]. Both keep the extended occurrence
// inside the window and on the right side of the condition/prediction order.
struct SearchZones {
    Timestamp condition_begin = 0;   // inclusive
    Timestamp condition_end = 0;     // exclusive
    Timestamp prediction_begin = 0;  // exclusive
    Timestamp prediction_end = 0;    // inclusive
};

SearchZones search_zones(const RuleOccurrence& occ, Duration window);

// One node of the expansion tree: the rule sides, every occurrence seen so
// far (not just the distinct ones), and the absolute supports feeding the
// interest computation. Basic rules keep their occurrences in ascending
// (t_i, t_j) scan order; extended lists are canonically sorted. Prediction
// expansion is only reachable while the condition is untouched; the
// recursion enforces that structurally.
struct ExpansionState {
    Multiset condition;
    Multiset prediction;
    std::vector<RuleOccurrence> occurrences;
    int support = 0;
    int condition_support = 0;   // |T(i)| for a single item, Count() once expanded
    int prediction_support = 0;
};

// A candidate one-item extension of one side: the grown occurrence list in
// canonical order and its distinct-occurrence count.
struct SideExtension {
    Item item;
    std::vector<RuleOccurrence> occurrences;
    int support = 0;
};

// All condition (resp. prediction) extension candidates of a state, one per
// item found in the search zones that passes the side filter and the
// lexicographic-or-equal gate.
std::vector<SideExtension> condition_extensions(const ExpansionState& state,
                                                const TimeSeries& ts,
                                                const MiningParams& params);
std::vector<SideExtension> prediction_extensions(const ExpansionState& state,
                                                 const TimeSeries& ts,
                                                 const MiningParams& params);

// Recursive expansion of one state; returns the rules it validates.
// expand_condition never grows the prediction; expand_prediction recurses
// into both sides.
std::vector<Rule> expand_condition(const ExpansionState& state, const TimeSeries& ts,
                                   const MiningParams& params);
std::vector<Rule> expand_prediction(const ExpansionState& state, const TimeSeries& ts,
                                    const MiningParams& params);

// Full mining run. Output is duplicate-free by canonical key and sorted by
// (interest desc, support desc, key asc).
std::vector<Rule> mine(const TimeSeries& ts, const MiningParams& params);

}  // namespace tsrg
