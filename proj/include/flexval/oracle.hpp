#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "flexval/dynamic_flex.hpp"

// Brute-force cross-checks for the closed-form results. Nothing here calls
// into the envelope, posterior or revision code it is meant to check.
namespace flexval::oracle {

enum class QuadratureRule { Midpoint, Trapezoid };

struct QuadratureSpec {
    std::size_t panel_count = 1'000'000;
    QuadratureRule rule = QuadratureRule::Midpoint;
};

// Composite rule. For piecewise-linear f the error is at most
// (hi - lo)^2 * L / panel_count, L a slope bound.
double quadrature(const std::function<double(double)>& f, double lo, double hi,
                  const QuadratureSpec& spec = {});

inline constexpr std::size_t kMaxPolicies = 1'000'000;

struct PolicyValue {
    std::string commitment;
    std::vector<std::string> policy;  // final action per evidence outcome; one entry if hard
    double value = 0.0;
};

// Every deterministic contingency plan of every commitment, valued by direct
// summation over the joint (evidence, state) probabilities.
std::vector<PolicyValue> enumerate_two_stage(const TwoStageModel& ts);

// Highest enumerated value for one commitment.
PolicyValue best_policy(const std::vector<PolicyValue>& values, const std::string& commitment);

}  // namespace flexval::oracle
