// interest.hpp - interestingness measures over relative supports.
// netconf is the primary measure; confidence, lift and conviction are
// selectable alternatives.
#pragma once

#include <optional>
#include <string>
#include <utility>

namespace tsrg {

enum class Measure { netconf, confidence, lift, conviction };

// Relative supports of the condition, the prediction and the rule itself,
// each in [0,1]. Mining semantics give rule_rel <= min(cond_rel, pred_rel).
struct InterestInputs {
    double cond_rel = 0.0;  // relSup(E_c)
    double pred_rel = 0.0;  // relSup(E_p)
    double rule_rel = 0.0;  // relSup(E_c => E_p)
};

// (rule_rel - cond_rel*pred_rel) / (cond_rel*(1 - cond_rel)), unclamped.
// Throws std::domain_error when cond_rel is 0 or 1 (zero denominator).
double netconf_raw(const InterestInputs& in);

// netconf clamped to [-1, 1]. Window-constrained supports can push the raw
// value below -1 on adversarial inputs; the measure's codomain is kept.
double netconf(const InterestInputs& in);

// rule_rel / cond_rel. Throws std::domain_error when cond_rel = 0.
double confidence(const InterestInputs& in);

// lift = rule_rel / (cond_rel*pred_rel);
// conviction = (1 - pred_rel) / (1 - confidence), +infinity at confidence 1.
// Throws std::domain_error on zero denominators.
std::pair<double, double> lift_and_conviction(const InterestInputs& in);

// Value of the selected measure. Throws std::domain_error where the measure
// is undefined.
double evaluate_measure(Measure m, const InterestInputs& in);

// As above but nullopt where undefined; what the miner uses.
std::optional<double> try_evaluate_measure(Measure m, const InterestInputs& in);

// True when the threshold lies in the measure's codomain.
bool min_interest_in_codomain(Measure m, double min_int);

std::string measure_name(Measure m);
std::optional<Measure> parse_measure(const std::string& name);

}  // namespace tsrg
