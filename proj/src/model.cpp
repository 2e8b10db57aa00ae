#include "flexval/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "flexval/error.hpp"

namespace flexval {

namespace {

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label,
                     const char* kind) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw Error(ErrorKind::UnknownLabel, std::string("unknown ") + kind + " '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

void check_labels(const std::vector<std::string>& labels, const std::string& list_name,
                  ValidationResult& out) {
    if (labels.empty()) {
        out.push_back({"empty label list", list_name});
    }
    std::set<std::string> seen;
    for (const auto& label : labels) {
        if (label.empty()) {
            out.push_back({"empty label", list_name});
        } else if (!seen.insert(label).second) {
            out.push_back({"duplicate label", list_name + ": " + label});
        }
    }
}

}  // namespace

std::size_t DecisionModel::state_index(const std::string& label) const {
    return index_of(states, label, "state");
}

std::size_t DecisionModel::alternative_index(const std::string& label) const {
    return index_of(alternatives, label, "alternative");
}

double Distribution::weight(const std::string& state) const {
    return weights.at(index_of(states, state, "state"));
}

BeliefFamily BeliefFamily::bernoulli(const std::vector<std::string>& states,
                                     const std::string& success_state,
                                     const std::string& failure_state) {
    const std::size_t success = index_of(states, success_state, "state");
    const std::size_t failure = index_of(states, failure_state, "state");
    if (success == failure) {
        throw Error(ErrorKind::InvalidModel, "bernoulli success and failure states coincide");
    }
    BeliefFamily family{{states, std::vector<double>(states.size(), 0.0)},
                        {states, std::vector<double>(states.size(), 0.0)}};
    family.endpoint0.weights[failure] = 1.0;
    family.endpoint1.weights[success] = 1.0;
    return family;
}

ValidationResult validate_model(const DecisionModel& model) {
    ValidationResult out;
    check_labels(model.states, "states", out);
    check_labels(model.alternatives, "alternatives", out);
    if (model.payoff.size() != model.alternatives.size()) {
        out.push_back({"incomplete payoff table",
                       "payoff has " + std::to_string(model.payoff.size()) + " rows for " +
                           std::to_string(model.alternatives.size()) + " alternatives"});
    }
    for (std::size_t a = 0; a < model.alternatives.size(); ++a) {
        if (a >= model.payoff.size()) {
            break;
        }
        const auto& row = model.payoff[a];
        for (std::size_t s = 0; s < model.states.size(); ++s) {
            if (s >= row.size()) {
                out.push_back({"incomplete payoff table",
                               "(" + model.alternatives[a] + ", " + model.states[s] + ")"});
            } else if (!std::isfinite(row[s])) {
                out.push_back({"non-finite payoff",
                               "(" + model.alternatives[a] + ", " + model.states[s] + ")"});
            }
        }
        if (row.size() > model.states.size()) {
            out.push_back({"extra payoff entries", model.alternatives[a]});
        }
    }
    return out;
}

ValidationResult validate_distribution(const Distribution& dist,
                                       const std::vector<std::string>& states) {
    ValidationResult out;
    if (dist.states != states) {
        out.push_back({"distribution support differs from model states", "states"});
        return out;
    }
    if (dist.weights.size() != states.size()) {
        out.push_back({"weight count differs from state count", "weights"});
        return out;
    }
    double total = 0.0;
    for (std::size_t s = 0; s < states.size(); ++s) {
        const double w = dist.weights[s];
        if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
            out.push_back({"probability outside [0,1]", states[s]});
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kTolerance) {
        out.push_back({"weights do not sum to 1", "sum = " + std::to_string(total)});
    }
    return out;
}

ValidationResult validate_family(const BeliefFamily& family,
                                 const std::vector<std::string>& states) {
    ValidationResult out;
    for (auto v : validate_distribution(family.endpoint0, states)) {
        v.where = "endpoint0: " + v.where;
        out.push_back(std::move(v));
    }
    for (auto v : validate_distribution(family.endpoint1, states)) {
        v.where = "endpoint1: " + v.where;
        out.push_back(std::move(v));
    }
    return out;
}

std::string format_violations(const ValidationResult& violations) {
    std::string text;
    for (const auto& v : violations) {
        if (!text.empty()) {
            text += "; ";
        }
        text += v.what + " [" + v.where + "]";
    }
    return text;
}

void require_valid(const DecisionModel& model) {
    if (auto v = validate_model(model); !v.empty()) {
        throw Error(ErrorKind::InvalidModel, format_violations(v));
    }
}

void require_valid(const Distribution& dist, const std::vector<std::string>& states) {
    if (dist.states != states) {
        throw Error(ErrorKind::MismatchedStates, "distribution states do not match model states");
    }
    if (auto v = validate_distribution(dist, states); !v.empty()) {
        throw Error(ErrorKind::InvalidModel, format_violations(v));
    }
}

void require_valid(const BeliefFamily& family, const std::vector<std::string>& states) {
    if (family.endpoint0.states != states || family.endpoint1.states != states) {
        throw Error(ErrorKind::MismatchedStates, "belief family states do not match model states");
    }
    if (auto v = validate_family(family, states); !v.empty()) {
        throw Error(ErrorKind::InvalidModel, format_violations(v));
    }
}

double payoff(const DecisionModel& model, const std::string& alternative,
              const std::string& state) {
    const std::size_t a = model.alternative_index(alternative);
    const std::size_t s = model.state_index(state);
    return model.payoff.at(a).at(s);
}

Distribution distribution_at(const BeliefFamily& family, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, "belief parameter " + std::to_string(p) +
                                               " outside [0,1]");
    }
    if (p == 0.0) {
        return family.endpoint0;
    }
    if (p == 1.0) {
        return family.endpoint1;
    }
    Distribution dist{family.endpoint0.states, {}};
    dist.weights.reserve(family.endpoint0.weights.size());
    for (std::size_t s = 0; s < family.endpoint0.weights.size(); ++s) {
        dist.weights.push_back((1.0 - p) * family.endpoint0.weights[s] +
                               p * family.endpoint1.weights[s]);
    }
    return dist;
}

double expected_payoff(const DecisionModel& model, std::size_t alternative,
                       const Distribution& dist) {
    double total = 0.0;
    const auto& row = model.payoff[alternative];
    for (std::size_t s = 0; s < row.size(); ++s) {
        total += dist.weights[s] * row[s];
    }
    return total;
}

}  // namespace flexval
