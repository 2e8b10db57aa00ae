#pragma once

#include <string>
#include <vector>

#include "flexval/model.hpp"

namespace flexval {

// Expected payoff of one alternative as a function of the belief parameter.
struct Line {
    double intercept = 0.0;
    double slope = 0.0;
    std::string label;

    double at(double p) const { return intercept + slope * p; }

    bool operator==(const Line&) const = default;
};

struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    Line line;
};

// Upper envelope of a set of lines on [0,1]. `inputs` keeps every line the
// envelope was built from, in declaration order, so that ties at a point can
// be reported.
struct Envelope {
    std::vector<Segment> segments;
    std::vector<Line> inputs;

    std::vector<double> breakpoints() const;  // interior segment boundaries
};

struct EnvelopePoint {
    double value = 0.0;
    std::vector<std::string> active;  // declaration order
};

Line ce_line(const DecisionModel& model, const BeliefFamily& family,
             const std::string& alternative);

// One line per alternative, declaration order.
std::vector<Line> ce_lines(const DecisionModel& model, const BeliefFamily& family);

Envelope upper_envelope(const std::vector<Line>& lines);

EnvelopePoint evaluate_envelope(const Envelope& env, double p);

double integrate_line(const Line& line, double lo, double hi);

double integrate_envelope(const Envelope& env, double lo, double hi);

}  // namespace flexval
