#include "flexval/static_flex.hpp"

#include <algorithm>
#include <limits>

#include "flexval/error.hpp"

namespace flexval {

namespace {

BrittlenessReport make_report(BrittlenessKind kind, const DecisionModel& model,
                              const std::vector<double>& values) {
    BrittlenessReport report;
    report.kind = kind;
    const double lowest = *std::min_element(values.begin(), values.end());
    for (std::size_t a = 0; a < values.size(); ++a) {
        report.values.emplace_back(model.alternatives[a], values[a]);
        if (values[a] - lowest <= kTolerance) {
            report.least_brittle.push_back(model.alternatives[a]);
        }
    }
    return report;
}

// Best payoff in each state.
std::vector<double> column_max(const DecisionModel& model) {
    std::vector<double> best(model.states.size(), -std::numeric_limits<double>::infinity());
    for (const auto& row : model.payoff) {
        for (std::size_t s = 0; s < row.size(); ++s) {
            best[s] = std::max(best[s], row[s]);
        }
    }
    return best;
}

}  // namespace

std::string_view to_string(BrittlenessKind kind) {
    switch (kind) {
        case BrittlenessKind::Outcomes: return "outcomes";
        case BrittlenessKind::Belief: return "belief";
        case BrittlenessKind::Clairvoyance: return "clairvoyance";
    }
    return "unknown";
}

std::optional<BrittlenessKind> brittleness_kind_from(std::string_view name) {
    if (name == "outcomes") return BrittlenessKind::Outcomes;
    if (name == "belief") return BrittlenessKind::Belief;
    if (name == "clairvoyance") return BrittlenessKind::Clairvoyance;
    return std::nullopt;
}

double BrittlenessReport::value_of(const std::string& alternative) const {
    for (const auto& [label, value] : values) {
        if (label == alternative) {
            return value;
        }
    }
    throw Error(ErrorKind::UnknownLabel, "unknown alternative '" + alternative + "'");
}

MeuResult meu(const DecisionModel& model, const Distribution& dist) {
    require_valid(model);
    require_valid(dist, model.states);
    std::vector<double> ev(model.alternatives.size());
    for (std::size_t a = 0; a < ev.size(); ++a) {
        ev[a] = expected_payoff(model, a, dist);
    }
    MeuResult result;
    result.value = *std::max_element(ev.begin(), ev.end());
    for (std::size_t a = 0; a < ev.size(); ++a) {
        if (result.value - ev[a] <= kTolerance) {
            result.best.push_back(model.alternatives[a]);
        }
    }
    return result;
}

BrittlenessReport brittleness_outcomes(const DecisionModel& model, const Distribution& dist) {
    require_valid(model);
    require_valid(dist, model.states);
    const auto best = column_max(model);
    std::vector<double> values(model.alternatives.size(), 0.0);
    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t s = 0; s < best.size(); ++s) {
            values[a] += dist.weights[s] * (best[s] - model.payoff[a][s]);
        }
    }
    return make_report(BrittlenessKind::Outcomes, model, values);
}

BrittlenessReport brittleness_belief(const DecisionModel& model, const BeliefFamily& family) {
    const auto lines = ce_lines(model, family);
    const double envelope_area = integrate_envelope(upper_envelope(lines), 0.0, 1.0);
    std::vector<double> values;
    values.reserve(lines.size());
    for (const auto& line : lines) {
        values.push_back(envelope_area - integrate_line(line, 0.0, 1.0));
    }
    return make_report(BrittlenessKind::Belief, model, values);
}

Line clairvoyance_line(const DecisionModel& model, const BeliefFamily& family) {
    require_valid(model);
    require_valid(family, model.states);
    const auto best = column_max(model);
    double at0 = 0.0;
    double at1 = 0.0;
    for (std::size_t s = 0; s < best.size(); ++s) {
        at0 += family.endpoint0.weights[s] * best[s];
        at1 += family.endpoint1.weights[s] * best[s];
    }
    return {at0, at1 - at0, "clairvoyance"};
}

BrittlenessReport brittleness_clairvoyance(const DecisionModel& model,
                                           const BeliefFamily& family) {
    const double clairvoyant_area = integrate_line(clairvoyance_line(model, family), 0.0, 1.0);
    const auto lines = ce_lines(model, family);
    std::vector<double> values;
    values.reserve(lines.size());
    for (const auto& line : lines) {
        values.push_back(clairvoyant_area - integrate_line(line, 0.0, 1.0));
    }
    return make_report(BrittlenessKind::Clairvoyance, model, values);
}

std::vector<std::pair<std::string, double>> flexibility_ranking(
    const DecisionModel& model, const BeliefFamily& family, BrittlenessKind kind,
    const std::optional<Distribution>& dist) {
    BrittlenessReport report;
    switch (kind) {
        case BrittlenessKind::Outcomes:
            if (!dist) {
                throw Error(ErrorKind::MissingDistribution,
                            "outcomes brittleness needs a distribution");
            }
            report = brittleness_outcomes(model, *dist);
            break;
        case BrittlenessKind::Belief:
            report = brittleness_belief(model, family);
            break;
        case BrittlenessKind::Clairvoyance:
            report = brittleness_clairvoyance(model, family);
            break;
    }
    auto ranking = report.values;
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    return ranking;
}

}  // namespace flexval
