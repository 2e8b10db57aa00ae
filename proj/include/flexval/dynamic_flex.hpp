#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flexval/bayes.hpp"
#include "flexval/model.hpp"

namespace flexval {

// First-stage choice. A hard commitment has no revision targets and does not
// buy the report; a soft one buys it and may switch to any target, paying
// switch_cost when the final action differs from initial_action.
struct Commitment {
    std::string label;
    std::string initial_action;
    std::vector<std::string> revision_targets;
    double switch_cost = 0.0;
    bool observes_evidence = false;

    bool operator==(const Commitment&) const = default;
};

struct TwoStageModel {
    DecisionModel base;
    Distribution prior;
    EvidenceModel evidence;
    std::vector<Commitment> commitments;

    const Commitment& commitment(const std::string& label) const;

    bool operator==(const TwoStageModel&) const = default;
};

ValidationResult validate_two_stage(const TwoStageModel& ts);
void require_valid(const TwoStageModel& ts);

struct RevisionChoice {
    std::string action;
    double net = 0.0;
};

struct PolicyRow {
    std::string evidence;  // "-" for a commitment that never observes evidence
    double probability = 0.0;
    std::string action;
    double net = 0.0;
};

struct PolicyReport {
    std::string commitment;
    std::vector<PolicyRow> rows;
    double value_with_flexibility = 0.0;
    double baseline = 0.0;
    double flexibility_value = 0.0;
};

inline constexpr const char* kNoEvidence = "-";

// Expected payoff of ending on `action` under `dist`, net of the report and
// switching costs the commitment incurs.
double net_value(const TwoStageModel& ts, const Commitment& c, const std::string& action,
                 const Distribution& dist);

RevisionChoice revision_policy(const TwoStageModel& ts, const Commitment& c,
                               const std::string& outcome);

double value_with_flexibility(const TwoStageModel& ts, const Commitment& c);

double baseline_value(const TwoStageModel& ts);

PolicyReport flexibility_value(const TwoStageModel& ts, const Commitment& c);

std::optional<std::pair<std::string, double>> most_flexible_commitment(const TwoStageModel& ts);

}  // namespace flexval
