#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flexval/envelope.hpp"
#include "flexval/model.hpp"

namespace flexval {

enum class BrittlenessKind { Outcomes, Belief, Clairvoyance };

std::string_view to_string(BrittlenessKind kind);
std::optional<BrittlenessKind> brittleness_kind_from(std::string_view name);

struct MeuResult {
    std::vector<std::string> best;  // every alternative within kTolerance of the max
    double value = 0.0;
};

struct BrittlenessReport {
    BrittlenessKind kind = BrittlenessKind::Outcomes;
    std::vector<std::pair<std::string, double>> values;  // declaration order
    std::vector<std::string> least_brittle;

    double value_of(const std::string& alternative) const;
};

MeuResult meu(const DecisionModel& model, const Distribution& dist);

// Expected regret of each alternative against the best alternative in the
// realised state.
BrittlenessReport brittleness_outcomes(const DecisionModel& model, const Distribution& dist);

// Average shortfall of each CE line below the envelope, uniform over the
// belief parameter. Closed form.
BrittlenessReport brittleness_belief(const DecisionModel& model, const BeliefFamily& family);

// Expected payoff of choosing after the state is revealed, as a line in the
// belief parameter.
Line clairvoyance_line(const DecisionModel& model, const BeliefFamily& family);

BrittlenessReport brittleness_clairvoyance(const DecisionModel& model,
                                           const BeliefFamily& family);

// Ascending brittleness, ties in declaration order. The outcomes kind needs
// `dist`.
std::vector<std::pair<std::string, double>> flexibility_ranking(
    const DecisionModel& model, const BeliefFamily& family, BrittlenessKind kind,
    const std::optional<Distribution>& dist = std::nullopt);

}  // namespace flexval
