#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "flexval/dynamic_flex.hpp"
#include "flexval/model.hpp"

namespace flexval {

// Everything a model document describes. `prior_p` is the belief parameter
// the document's "belief.p" holds; `two_stage` is present when the document
// has both "evidence" and "commitments".
struct ParsedModel {
    DecisionModel model;
    BeliefFamily family;
    double prior_p = 0.0;
    std::optional<EvidenceModel> evidence;
    std::optional<TwoStageModel> two_stage;

    bool operator==(const ParsedModel&) const = default;
};

// Throws Error with kind Syntax (line/column in the message), Schema (key
// path in the message) or InvalidModel.
ParsedModel parse_model(const std::string& text);

// Rebuild the derived prior and two-stage model for a different belief
// parameter.
ParsedModel with_prior(ParsedModel parsed, double p);

// Canonical document for a parsed model; the belief is always written in
// mixture form. parse_model(model_to_json(m).dump()) == m.
nlohmann::ordered_json model_to_json(const ParsedModel& parsed);

}  // namespace flexval
