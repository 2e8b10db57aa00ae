#include "flexval/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "flexval/error.hpp"

namespace flexval {

namespace {

constexpr double kZeroEvidence = 1e-15;

double marginal(const Distribution& prior, const EvidenceModel& ev, std::size_t e) {
    double total = 0.0;
    for (std::size_t s = 0; s < prior.weights.size(); ++s) {
        total += ev.likelihood[s][e] * prior.weights[s];
    }
    return total;
}

}  // namespace

std::size_t EvidenceModel::outcome_index(const std::string& label) const {
    auto it = std::find(outcomes.begin(), outcomes.end(), label);
    if (it == outcomes.end()) {
        throw Error(ErrorKind::UnknownLabel, "unknown evidence outcome '" + label + "'");
    }
    return static_cast<std::size_t>(it - outcomes.begin());
}

ValidationResult validate_evidence(const EvidenceModel& ev, std::size_t state_count) {
    ValidationResult out;
    if (ev.outcomes.empty()) {
        out.push_back({"empty label list", "evidence.outcomes"});
    }
    std::set<std::string> seen;
    for (const auto& label : ev.outcomes) {
        if (label.empty()) {
            out.push_back({"empty label", "evidence.outcomes"});
        } else if (!seen.insert(label).second) {
            out.push_back({"duplicate label", "evidence.outcomes: " + label});
        }
    }
    if (!std::isfinite(ev.info_cost) || ev.info_cost < 0.0) {
        out.push_back({"information cost must be finite and >= 0", "evidence.info_cost"});
    }
    if (ev.likelihood.size() != state_count) {
        out.push_back({"likelihood needs one row per state", "evidence.likelihood"});
        return out;
    }
    for (std::size_t s = 0; s < state_count; ++s) {
        const auto& row = ev.likelihood[s];
        const std::string where = "evidence.likelihood[" + std::to_string(s) + "]";
        if (row.size() != ev.outcomes.size()) {
            out.push_back({"likelihood row needs one entry per outcome", where});
            continue;
        }
        double total = 0.0;
        for (double p : row) {
            if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
                out.push_back({"probability outside [0,1]", where});
            }
            total += p;
        }
        if (std::abs(total - 1.0) > kTolerance) {
            out.push_back({"likelihood row does not sum to 1", where});
        }
    }
    return out;
}

void require_valid(const EvidenceModel& ev, std::size_t state_count) {
    if (auto v = validate_evidence(ev, state_count); !v.empty()) {
        throw Error(ErrorKind::InvalidModel, format_violations(v));
    }
}

std::vector<double> preposterior(const Distribution& prior, const EvidenceModel& ev) {
    require_valid(ev, prior.weights.size());
    std::vector<double> out(ev.outcomes.size());
    for (std::size_t e = 0; e < out.size(); ++e) {
        out[e] = marginal(prior, ev, e);
    }
    return out;
}

Distribution posterior(const Distribution& prior, const EvidenceModel& ev,
                       const std::string& outcome) {
    require_valid(ev, prior.weights.size());
    const std::size_t e = ev.outcome_index(outcome);
    const double evidence_probability = marginal(prior, ev, e);
    if (evidence_probability <= kZeroEvidence) {
        throw Error(ErrorKind::ZeroProbabilityEvidence,
                    "evidence '" + outcome + "' has zero probability under the prior");
    }
    Distribution out{prior.states, std::vector<double>(prior.weights.size())};
    for (std::size_t s = 0; s < out.weights.size(); ++s) {
        out.weights[s] = ev.likelihood[s][e] * prior.weights[s] / evidence_probability;
    }
    return out;
}

}  // namespace flexval
