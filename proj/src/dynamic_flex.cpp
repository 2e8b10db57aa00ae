#include "flexval/dynamic_flex.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "flexval/error.hpp"

namespace flexval {

namespace {

bool contains(const std::vector<std::string>& labels, const std::string& label) {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

// Initial action first, then the targets in declaration order.
std::vector<std::string> final_options(const Commitment& c) {
    std::vector<std::string> options{c.initial_action};
    options.insert(options.end(), c.revision_targets.begin(), c.revision_targets.end());
    return options;
}

}  // namespace

const Commitment& TwoStageModel::commitment(const std::string& label) const {
    for (const auto& c : commitments) {
        if (c.label == label) {
            return c;
        }
    }
    throw Error(ErrorKind::UnknownLabel, "unknown commitment '" + label + "'");
}

ValidationResult validate_two_stage(const TwoStageModel& ts) {
    ValidationResult out = validate_model(ts.base);
    for (auto v : validate_distribution(ts.prior, ts.base.states)) {
        v.where = "prior: " + v.where;
        out.push_back(std::move(v));
    }
    for (auto& v : validate_evidence(ts.evidence, ts.base.states.size())) {
        out.push_back(std::move(v));
    }
    if (ts.commitments.empty()) {
        out.push_back({"at least one commitment required", "commitments"});
    }
    std::set<std::string> seen;
    for (const auto& c : ts.commitments) {
        const std::string where = "commitments: " + c.label;
        if (c.label.empty()) {
            out.push_back({"empty label", "commitments"});
        } else if (!seen.insert(c.label).second) {
            out.push_back({"duplicate label", where});
        }
        if (!contains(ts.base.alternatives, c.initial_action)) {
            out.push_back({"initial action is not an alternative", where});
        }
        std::set<std::string> targets;
        for (const auto& target : c.revision_targets) {
            if (!contains(ts.base.alternatives, target)) {
                out.push_back({"revision target is not an alternative", where + ": " + target});
            }
            if (target == c.initial_action) {
                out.push_back({"initial action listed as revision target", where});
            }
            if (!targets.insert(target).second) {
                out.push_back({"duplicate revision target", where + ": " + target});
            }
        }
        if (!c.revision_targets.empty() && !c.observes_evidence) {
            out.push_back({"revisable commitment must observe evidence", where});
        }
        if (!std::isfinite(c.switch_cost) || c.switch_cost < 0.0) {
            out.push_back({"switch cost must be finite and >= 0", where});
        }
    }
    return out;
}

void require_valid(const TwoStageModel& ts) {
    if (auto v = validate_two_stage(ts); !v.empty()) {
        throw Error(ErrorKind::InvalidModel, format_violations(v));
    }
}

double net_value(const TwoStageModel& ts, const Commitment& c, const std::string& action,
                 const Distribution& dist) {
    if (action != c.initial_action && !contains(c.revision_targets, action)) {
        throw Error(ErrorKind::IllegalRevision, "commitment '" + c.label +
                                                    "' cannot end on '" + action + "'");
    }
    require_valid(dist, ts.base.states);
    double value = expected_payoff(ts.base, ts.base.alternative_index(action), dist);
    if (c.observes_evidence) {
        value -= ts.evidence.info_cost;
    }
    if (action != c.initial_action) {
        value -= c.switch_cost;
    }
    return value;
}

RevisionChoice revision_policy(const TwoStageModel& ts, const Commitment& c,
                               const std::string& outcome) {
    require_valid(ts);
    if (!c.observes_evidence) {
        throw Error(ErrorKind::IllegalRevision,
                    "commitment '" + c.label + "' does not observe evidence");
    }
    const Distribution post = posterior(ts.prior, ts.evidence, outcome);
    RevisionChoice best;
    bool first = true;
    for (const auto& option : final_options(c)) {
        const double value = net_value(ts, c, option, post);
        if (first || value > best.net + kTolerance) {
            best = {option, value};
            first = false;
        }
    }
    return best;
}

namespace {

PolicyReport evaluate(const TwoStageModel& ts, const Commitment& c) {
    PolicyReport report;
    report.commitment = c.label;
    if (!c.observes_evidence) {
        const double value = net_value(ts, c, c.initial_action, ts.prior);
        report.rows.push_back({kNoEvidence, 1.0, c.initial_action, value});
        report.value_with_flexibility = value;
        return report;
    }
    const auto marginals = preposterior(ts.prior, ts.evidence);
    for (std::size_t e = 0; e < marginals.size(); ++e) {
        const auto& outcome = ts.evidence.outcomes[e];
        try {
            const auto choice = revision_policy(ts, c, outcome);
            report.rows.push_back({outcome, marginals[e], choice.action, choice.net});
            report.value_with_flexibility += marginals[e] * choice.net;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::ZeroProbabilityEvidence) {
                throw;
            }
            report.rows.push_back({outcome, marginals[e], c.initial_action, 0.0});
        }
    }
    return report;
}

}  // namespace

double value_with_flexibility(const TwoStageModel& ts, const Commitment& c) {
    require_valid(ts);
    return evaluate(ts, c).value_with_flexibility;
}

double baseline_value(const TwoStageModel& ts) {
    require_valid(ts);
    double best = 0.0;
    bool first = true;
    for (const auto& c : ts.commitments) {
        const double value =
            expected_payoff(ts.base, ts.base.alternative_index(c.initial_action), ts.prior);
        if (first || value > best) {
            best = value;
            first = false;
        }
    }
    return best;
}

PolicyReport flexibility_value(const TwoStageModel& ts, const Commitment& c) {
    require_valid(ts);
    PolicyReport report = evaluate(ts, c);
    report.baseline = baseline_value(ts);
    report.flexibility_value = report.value_with_flexibility - report.baseline;
    return report;
}

std::optional<std::pair<std::string, double>> most_flexible_commitment(const TwoStageModel& ts) {
    require_valid(ts);
    std::optional<std::pair<std::string, double>> best;
    for (const auto& c : ts.commitments) {
        const double f = flexibility_value(ts, c).flexibility_value;
        if (f > kTolerance && (!best || f > best->second + kTolerance)) {
            best = {c.label, f};
        }
    }
    return best;
}

}  // namespace flexval
