#pragma once

#include <optional>
#include <string>

#include "flexval/dynamic_flex.hpp"
#include "flexval/model.hpp"

namespace flexval {

struct SvgOptions {
    bool ce_lines = true;
    bool envelope = true;
    bool clairvoyance = false;
    std::optional<std::string> shade;  // alternative whose shortfall is shaded
    std::optional<double> prior_marker;

    // Two-stage overlay: cost-shifted lines of one commitment, posterior
    // markers, and the flexibility gap at prior_marker.
    std::optional<TwoStageModel> two_stage;
    std::optional<std::string> commitment;

    int width = 640;
    int height = 420;
};

// Best-fitting belief parameter for an arbitrary distribution (least squares
// onto the family's segment, clamped to [0,1]). Exact for Bernoulli families.
double project_to_family(const BeliefFamily& family, const Distribution& dist);

std::string render_svg(const DecisionModel& model, const BeliefFamily& family,
                       const SvgOptions& options);

}  // namespace flexval
