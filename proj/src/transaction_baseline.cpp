#include "tsrg/transaction_baseline.hpp"

#include <algorithm>
#include <stdexcept>

#include "tsrg/interest.hpp"
#include "tsrg/support_engine.hpp"

namespace tsrg {

bool Transaction::contains(const Item& x) const {
    for (const auto& itemset : itemsets)
        if (std::binary_search(itemset.begin(), itemset.end(), x)) return true;
    return false;
}

bool Transaction::contains_ordered_pair(const Item& x, const Item& y) const {
    // first position of x, then any later itemset with y
    std::size_t first_x = itemsets.size();
    for (std::size_t p = 0; p < itemsets.size(); ++p) {
        if (std::binary_search(itemsets[p].begin(), itemsets[p].end(), x)) {
            first_x = p;
            break;
        }
    }
    for (std::size_t p = first_x + 1; p < itemsets.size(); ++p)
        if (std::binary_search(itemsets[p].begin(), itemsets[p].end(), y)) return true;
    return false;
}

std::vector<Transaction> split_into_transactions(const TimeSeries& ts, Duration delta_tr) {
    if (delta_tr <= 0) throw std::invalid_argument("split_into_transactions: delta_tr must be > 0");
    std::vector<Transaction> out;
    if (ts.empty()) return out;

    const Timestamp start = ts.entries.front().time;
    std::int64_t current_bin = -1;
    for (const Entry& e : ts.entries) {
        const std::int64_t bin = (e.time - start) / delta_tr;
        if (bin != current_bin) {
            out.emplace_back();
            current_bin = bin;
        }
        out.back().itemsets.push_back(e.items);
    }
    return out;
}

TransactionRuleStats transaction_rule_stats(const Item& i, const Item& j,
                                            const std::vector<Transaction>& transactions) {
    TransactionRuleStats stats;
    for (const Transaction& tr : transactions) {
        if (tr.contains(i)) ++stats.sup_i;
        if (tr.contains(j)) ++stats.sup_j;
        if (tr.contains_ordered_pair(i, j)) ++stats.sup_rule;
    }
    if (stats.sup_i == 0)
        throw std::domain_error("transaction_rule_stats: confidence undefined, sup_i is 0");
    stats.confidence = static_cast<double>(stats.sup_rule) / static_cast<double>(stats.sup_i);
    return stats;
}

PathologyReport pathology_report(const TimeSeries& ts, Duration delta_tr, Duration window,
                                 const Item& i, const Item& j) {
    PathologyReport report;

    const auto transactions = split_into_transactions(ts, delta_tr);
    report.transaction_count = static_cast<int>(transactions.size());
    try {
        const TransactionRuleStats stats = transaction_rule_stats(i, j, transactions);
        report.transaction_sup_rule = stats.sup_rule;
        report.transaction_sup_i = stats.sup_i;
        report.transaction_sup_j = stats.sup_j;
        report.transaction_confidence = stats.confidence;
        report.transaction_confidence_defined = true;
    } catch (const std::domain_error&) {
        for (const Transaction& tr : transactions)
            if (tr.contains(j)) ++report.transaction_sup_j;
    }

    report.series_sup_i = item_support(ts, i);
    report.series_sup_j = item_support(ts, j);
    report.series_sup_rule = basic_rule_support(i, j, ts, window).support;

    if (!ts.empty()) {
        InterestInputs in;
        in.cond_rel = relative_support(report.series_sup_i, ts);
        in.pred_rel = relative_support(report.series_sup_j, ts);
        in.rule_rel = relative_support(report.series_sup_rule, ts);
        if (report.series_sup_i > 0) {
            report.series_confidence = confidence(in);
            report.series_confidence_defined = true;
        }
        if (auto nc = try_evaluate_measure(Measure::netconf, in)) {
            report.netconf_value = *nc;
            report.netconf_defined = true;
        }
    }
    return report;
}

}  // namespace tsrg
