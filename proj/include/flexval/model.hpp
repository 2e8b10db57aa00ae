#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flexval {

// Money and probabilities are plain doubles. Comparisons use this tolerance
// unless an operation states otherwise.
inline constexpr double kTolerance = 1e-9;

// Finite decision problem: alternatives x states with a money payoff table.
// payoff[a][s] is the value of alternative a in state s, both in declaration
// order. Construction does not validate; call validate_model().
struct DecisionModel {
    std::vector<std::string> states;
    std::vector<std::string> alternatives;
    std::vector<std::vector<double>> payoff;

    std::size_t state_index(const std::string& label) const;
    std::size_t alternative_index(const std::string& label) const;

    bool operator==(const DecisionModel&) const = default;
};

// Probability mass over an ordered list of states.
struct Distribution {
    std::vector<std::string> states;
    std::vector<double> weights;

    double weight(const std::string& state) const;

    bool operator==(const Distribution&) const = default;
};

// family(p) = (1 - p) * endpoint0 + p * endpoint1.
struct BeliefFamily {
    Distribution endpoint0;
    Distribution endpoint1;

    // endpoint0 = point mass on failure_state, endpoint1 = point mass on
    // success_state.
    static BeliefFamily bernoulli(const std::vector<std::string>& states,
                                  const std::string& success_state,
                                  const std::string& failure_state);

    bool operator==(const BeliefFamily&) const = default;
};

struct Violation {
    std::string what;
    std::string where;

    bool operator==(const Violation&) const = default;
};

using ValidationResult = std::vector<Violation>;  // empty means ok

ValidationResult validate_model(const DecisionModel& model);
ValidationResult validate_distribution(const Distribution& dist,
                                       const std::vector<std::string>& states);
ValidationResult validate_family(const BeliefFamily& family,
                                 const std::vector<std::string>& states);

// Throw ErrorKind::InvalidModel listing every violation.
void require_valid(const DecisionModel& model);
void require_valid(const Distribution& dist, const std::vector<std::string>& states);
void require_valid(const BeliefFamily& family, const std::vector<std::string>& states);

double payoff(const DecisionModel& model, const std::string& alternative,
              const std::string& state);

Distribution distribution_at(const BeliefFamily& family, double p);

// Expected payoff of one alternative (by index) under dist. Caller guarantees
// dist is over model.states.
double expected_payoff(const DecisionModel& model, std::size_t alternative,
                       const Distribution& dist);

std::string format_violations(const ValidationResult& violations);

}  // namespace flexval
