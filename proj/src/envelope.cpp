#include "flexval/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flexval/error.hpp"

namespace flexval {

namespace {

constexpr double kMinWidth = 1e-12;

void check_interval(double lo, double hi) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
        throw Error(ErrorKind::BadInterval, "interval [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "] not within [0,1]");
    }
}

// Parameter where two non-parallel lines cross.
double crossing(const Line& a, const Line& b) {
    return (a.intercept - b.intercept) / (b.slope - a.slope);
}

}  // namespace

std::vector<double> Envelope::breakpoints() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < segments.size(); ++i) {
        out.push_back(segments[i].lo);
    }
    return out;
}

Line ce_line(const DecisionModel& model, const BeliefFamily& family,
             const std::string& alternative) {
    require_valid(model);
    require_valid(family, model.states);
    const std::size_t a = model.alternative_index(alternative);
    const double at0 = expected_payoff(model, a, family.endpoint0);
    const double at1 = expected_payoff(model, a, family.endpoint1);
    return {at0, at1 - at0, alternative};
}

std::vector<Line> ce_lines(const DecisionModel& model, const BeliefFamily& family) {
    std::vector<Line> lines;
    lines.reserve(model.alternatives.size());
    for (const auto& alternative : model.alternatives) {
        lines.push_back(ce_line(model, family, alternative));
    }
    return lines;
}

Envelope upper_envelope(const std::vector<Line>& lines) {
    if (lines.empty()) {
        throw Error(ErrorKind::EmptyInput, "upper envelope of zero lines");
    }
    for (const auto& line : lines) {
        if (!std::isfinite(line.intercept) || !std::isfinite(line.slope)) {
            throw Error(ErrorKind::InvalidModel, "non-finite line '" + line.label + "'");
        }
    }

    // Slope ascending, then intercept descending, then declaration order, so
    // the first line of each slope class is the one that survives.
    std::vector<std::size_t> order(lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lines[a].slope != lines[b].slope) {
            return lines[a].slope < lines[b].slope;
        }
        return lines[a].intercept > lines[b].intercept;
    });

    std::vector<const Line*> hull;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Line& line = lines[order[k]];
        if (!hull.empty() && hull.back()->slope == line.slope) {
            continue;  // parallel and not higher
        }
        while (hull.size() >= 2 &&
               crossing(*hull[hull.size() - 2], line) <=
                   crossing(*hull[hull.size() - 2], *hull.back())) {
            hull.pop_back();
        }
        hull.push_back(&line);
    }

    // Clip the hull over the reals to [0,1].
    Envelope env;
    env.inputs = lines;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        double lo = i == 0 ? 0.0 : std::clamp(crossing(*hull[i - 1], *hull[i]), 0.0, 1.0);
        double hi = i + 1 == hull.size() ? 1.0
                                         : std::clamp(crossing(*hull[i], *hull[i + 1]), 0.0, 1.0);
        if (hi - lo < kMinWidth) {
            continue;
        }
        if (!env.segments.empty() && lo - env.segments.back().hi < kMinWidth) {
            lo = env.segments.back().hi;
        }
        env.segments.push_back({lo, hi, *hull[i]});
    }
    env.segments.front().lo = 0.0;
    env.segments.back().hi = 1.0;
    for (std::size_t i = 1; i < env.segments.size(); ++i) {
        env.segments[i].lo = env.segments[i - 1].hi;
    }
    return env;
}

EnvelopePoint evaluate_envelope(const Envelope& env, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, "belief parameter " + std::to_string(p) +
                                               " outside [0,1]");
    }
    auto it = std::find_if(env.segments.begin(), env.segments.end(),
                           [p](const Segment& s) { return p <= s.hi; });
    if (it == env.segments.end()) {
        it = std::prev(env.segments.end());
    }
    EnvelopePoint point;
    point.value = it->line.at(p);
    for (const auto& line : env.inputs) {
        if (std::abs(line.at(p) - point.value) <= kTolerance &&
            std::find(point.active.begin(), point.active.end(), line.label) ==
                point.active.end()) {
            point.active.push_back(line.label);
        }
    }
    return point;
}

double integrate_line(const Line& line, double lo, double hi) {
    check_interval(lo, hi);
    return line.intercept * (hi - lo) + line.slope * (hi * hi - lo * lo) / 2.0;
}

double integrate_envelope(const Envelope& env, double lo, double hi) {
    check_interval(lo, hi);
    double total = 0.0;
    for (const auto& segment : env.segments) {
        const double a = std::max(lo, segment.lo);
        const double b = std::min(hi, segment.hi);
        if (a < b) {
            total += integrate_line(segment.line, a, b);
        }
    }
    return total;
}

}  // namespace flexval
