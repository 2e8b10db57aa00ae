#pragma once

#include <string>
#include <vector>

#include "flexval/model.hpp"

namespace flexval {

// Report outcomes with likelihoods P(e | x). likelihood[x][e] is indexed by
// state (model declaration order) then outcome, so each row sums to 1.
struct EvidenceModel {
    std::vector<std::string> outcomes;
    std::vector<std::vector<double>> likelihood;
    double info_cost = 0.0;

    std::size_t outcome_index(const std::string& label) const;

    bool operator==(const EvidenceModel&) const = default;
};

ValidationResult validate_evidence(const EvidenceModel& ev, std::size_t state_count);
void require_valid(const EvidenceModel& ev, std::size_t state_count);

// Marginal probability of each outcome under `prior`, outcome order.
std::vector<double> preposterior(const Distribution& prior, const EvidenceModel& ev);

Distribution posterior(const Distribution& prior, const EvidenceModel& ev,
                       const std::string& outcome);

}  // namespace flexval
