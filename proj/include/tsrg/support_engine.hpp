// support_engine.hpp - time-series support: item support, multiset support
// via the sliding-window blacklist scheme, basic rule support, relative
// support. All functions are pure over an immutable TimeSeries.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "tsrg/event_model.hpp"

namespace tsrg {

// Consumed timestamps per item. A timestamp that contributed to one distinct
// occurrence of a rule or multiset can never contribute to another one.
// Blacklists are scoped to a single rule or multiset count; different rules
// never share them.
using Blacklist = std::map<Item, std::set<Timestamp>>;

// Result of a rule support count. `occurrences` holds ALL window-compatible
// occurrences seen (the raw material for rule expansion), not only the
// distinct ones; `support` counts the distinct ones.
struct SupportResult {
    int support = 0;
    std::vector<RuleOccurrence> occurrences;
};

// Number of itemsets of the series containing x. Absent item gives 0.
int item_support(const TimeSeries& ts, const Item& x);

// Distinct occurrences of multiset A under a sliding duration window.
// The window advances one itemset at a time; the position anchored at entry
// k covers every entry with time - t_k <= window. Within a position, each
// item's candidates are its timestamps in the window minus its blacklist;
// one occurrence is counted when every item has at least multiplicity-many
// candidates, and the oldest candidates are then blacklisted.
// A must be non-empty and window >= 0.
int count_multiset_support(const Multiset& A, const TimeSeries& ts, Duration window);

// Support of the basic rule i => j: scans every timestamp pair
// (t_i in T(i), t_j in T(j)) with 0 < t_j - t_i <= window in ascending
// (t_i, t_j) order. Every qualifying pair is recorded as an occurrence;
// support counts only pairs whose timestamps are not yet consumed.
SupportResult basic_rule_support(const Item& i, const Item& j, const TimeSeries& ts,
                                 Duration window);

// Same scan over precomputed timestamp lists (the miner's single-pass index).
SupportResult basic_rule_support(const std::vector<Timestamp>& cond_times,
                                 const std::vector<Timestamp>& pred_times,
                                 const Item& i, const Item& j, Duration window);

// sup / number-of-itemsets. The series must be non-empty.
double relative_support(int sup, const TimeSeries& ts);

// True when some timestamp of the occurrence is already consumed for its
// item. The check consults the blacklists of both sides: within one rule an
// item's timestamp can be consumed at most once, no matter which side used it.
bool occurrence_blocked(const RuleOccurrence& occ, const Blacklist& cond_bl,
                        const Blacklist& pred_bl);

// Marks every timestamp of the occurrence as consumed on its own side.
void consume_occurrence(const RuleOccurrence& occ, Blacklist& cond_bl, Blacklist& pred_bl);

// Greedy distinct count over an occurrence list, in list order, with fresh
// blacklists. Callers sort the list first (see canonical_occurrence_less).
int count_distinct_occurrences(const std::vector<RuleOccurrence>& occs);

// Canonical processing order for extended-rule occurrence lists: ascending
// newest timestamp, ties broken by comparing the timestamp structure itself.
bool canonical_occurrence_less(const RuleOccurrence& a, const RuleOccurrence& b);

}  // namespace tsrg
