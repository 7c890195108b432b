// transaction_baseline.hpp - the conversion baseline: slice a time series
// into fixed-duration transactions, drop the timestamps, and count rule
// support per transaction. Exists to show how slicing inflates confidence
// compared to the time-series support.
#pragma once

#include <vector>

#include "tsrg/event_model.hpp"

namespace tsrg {

// Itemset sequence of one time slice, original order kept, timestamps gone.
struct Transaction {
    std::vector<std::vector<Item>> itemsets;

    bool contains(const Item& x) const;
    // True when x appears in an itemset strictly before one containing y.
    bool contains_ordered_pair(const Item& x, const Item& y) const;
};

// Partitions entries into consecutive half-open bins [start, start + delta)
// anchored at the first timestamp. Empty bins produce no transaction.
// delta_tr must be > 0.
std::vector<Transaction> split_into_transactions(const TimeSeries& ts, Duration delta_tr);

struct TransactionRuleStats {
    int sup_rule = 0;  // transactions containing i strictly before j
    int sup_i = 0;
    int sup_j = 0;
    double confidence = 0.0;  // sup_rule / sup_i
};

// Throws std::domain_error when sup_i is 0 (confidence undefined).
TransactionRuleStats transaction_rule_stats(const Item& i, const Item& j,
                                            const std::vector<Transaction>& transactions);

// Side-by-side comparison of the two support semantics for one rule i => j.
struct PathologyReport {
    // transaction side
    int transaction_count = 0;
    int transaction_sup_rule = 0;
    int transaction_sup_i = 0;
    int transaction_sup_j = 0;
    bool transaction_confidence_defined = false;
    double transaction_confidence = 0.0;
    // time-series side
    int series_sup_i = 0;
    int series_sup_j = 0;
    int series_sup_rule = 0;
    bool series_confidence_defined = false;
    double series_confidence = 0.0;  // relSup(rule) / relSup(i)
    bool netconf_defined = false;
    double netconf_value = 0.0;
};

PathologyReport pathology_report(const TimeSeries& ts, Duration delta_tr, Duration window,
                                 const Item& i, const Item& j);

}  // namespace tsrg
