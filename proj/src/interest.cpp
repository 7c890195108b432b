#include "tsrg/interest.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tsrg {

double netconf_raw(const InterestInputs& in) {
    if (in.cond_rel <= 0.0 || in.cond_rel >= 1.0)
        throw std::domain_error("netconf undefined: relSup(condition) must be in (0,1)");
    return (in.rule_rel - in.cond_rel * in.pred_rel) / (in.cond_rel * (1.0 - in.cond_rel));
}

double netconf(const InterestInputs& in) {
    return std::clamp(netconf_raw(in), -1.0, 1.0);
}

double confidence(const InterestInputs& in) {
    if (in.cond_rel <= 0.0)
        throw std::domain_error("confidence undefined: relSup(condition) is zero");
    return in.rule_rel / in.cond_rel;
}

std::pair<double, double> lift_and_conviction(const InterestInputs& in) {
    if (in.cond_rel <= 0.0 || in.pred_rel <= 0.0)
        throw std::domain_error("lift undefined: zero side support");
    const double lift = in.rule_rel / (in.cond_rel * in.pred_rel);
    const double conf = confidence(in);
    const double conviction = conf == 1.0 ? std::numeric_limits<double>::infinity()
                                          : (1.0 - in.pred_rel) / (1.0 - conf);
    return {lift, conviction};
}

double evaluate_measure(Measure m, const InterestInputs& in) {
    switch (m) {
        case Measure::netconf:
            return netconf(in);
        case Measure::confidence:
            return confidence(in);
        case Measure::lift:
            return lift_and_conviction(in).first;
        case Measure::conviction:
            return lift_and_conviction(in).second;
    }
    throw std::logic_error("unknown measure");
}

std::optional<double> try_evaluate_measure(Measure m, const InterestInputs& in) {
    try {
        return evaluate_measure(m, in);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

bool min_interest_in_codomain(Measure m, double min_int) {
    switch (m) {
        case Measure::netconf:
            return min_int >= -1.0 && min_int <= 1.0;
        case Measure::confidence:
            return min_int >= 0.0 && min_int <= 1.0;
        case Measure::lift:
        case Measure::conviction:
            return min_int >= 0.0;
    }
    return false;
}

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::netconf:
            return "netconf";
        case Measure::confidence:
            return "confidence";
        case Measure::lift:
            return "lift";
        case Measure::conviction:
            return "conviction";
    }
    return "unknown";
}

std::optional<Measure> parse_measure(const std::string& name) {
    if (name == "netconf") return Measure::netconf;
    if (name == "confidence") return Measure::confidence;
    if (name == "lift") return Measure::lift;
    if (name == "conviction") return Measure::conviction;
    return std::nullopt;
}

}  // namespace tsrg
