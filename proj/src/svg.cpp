#include "flexval/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "flexval/envelope.hpp"
#include "flexval/error.hpp"
#include "flexval/static_flex.hpp"

namespace flexval {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string out = buf;
    return out == "-0.00" ? "0.00" : out;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

struct Frame {
    double left, top, plot_w, plot_h;
    double y_min, y_max;

    double x(double p) const { return left + p * plot_w; }
    double y(double v) const { return top + (y_max - v) / (y_max - y_min) * plot_h; }
};

struct Shifted {
    Line line;
    std::string color;
};

}  // namespace

double project_to_family(const BeliefFamily& family, const Distribution& dist) {
    double num_sum = 0.0;
    double den_sum = 0.0;
    for (std::size_t s = 0; s < dist.weights.size(); ++s) {
        const double d = family.endpoint1.weights[s] - family.endpoint0.weights[s];
        num_sum += (dist.weights[s] - family.endpoint0.weights[s]) * d;
        den_sum += d * d;
    }
    if (den_sum == 0.0) {
        return 0.0;
    }
    return std::clamp(num_sum / den_sum, 0.0, 1.0);
}

std::string render_svg(const DecisionModel& model, const BeliefFamily& family,
                       const SvgOptions& options) {
    const auto lines = ce_lines(model, family);
    const Envelope env = upper_envelope(lines);
    if (options.shade) {
        model.alternative_index(*options.shade);
    }

    std::vector<Shifted> shifted;
    const Commitment* commitment = nullptr;
    if (options.two_stage) {
        require_valid(*options.two_stage);
        const auto& ts = *options.two_stage;
        commitment = options.commitment ? &ts.commitment(*options.commitment) : nullptr;
        if (commitment == nullptr) {
            for (const auto& c : ts.commitments) {
                if (c.observes_evidence) {
                    commitment = &c;
                    break;
                }
            }
        }
        if (commitment != nullptr) {
            std::vector<std::string> finals{commitment->initial_action};
            finals.insert(finals.end(), commitment->revision_targets.begin(),
                          commitment->revision_targets.end());
            for (const auto& action : finals) {
                const std::size_t a = model.alternative_index(action);
                double cost = commitment->observes_evidence ? ts.evidence.info_cost : 0.0;
                if (action != commitment->initial_action) {
                    cost += commitment->switch_cost;
                }
                Line l = lines[a];
                l.intercept -= cost;
                l.label = action + " - " + num(cost);
                shifted.push_back({l, kPalette[a % kPalette.size()]});
            }
        }
    }

    std::vector<Line> extent = lines;
    const Line clairvoyant = clairvoyance_line(model, family);
    if (options.clairvoyance) {
        extent.push_back(clairvoyant);
    }
    for (const auto& s : shifted) {
        extent.push_back(s.line);
    }
    double lo = extent.front().at(0.0);
    double hi = lo;
    for (const auto& l : extent) {
        lo = std::min({lo, l.at(0.0), l.at(1.0)});
        hi = std::max({hi, l.at(0.0), l.at(1.0)});
    }
    if (hi - lo < 1e-9) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double margin = 0.05 * (hi - lo);
    const Frame f{60.0, 20.0, options.width - 60.0 - 140.0, options.height - 20.0 - 50.0,
                  lo - margin, hi + margin};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
        << "\" fill=\"white\"/>\n";

    // Axes and ticks.
    const double x0 = f.x(0.0), x1 = f.x(1.0);
    const double yb = f.top + f.plot_h;
    svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" "
           "font-size=\"11\">\n";
    svg << "<line x1=\"" << num(x0) << "\" y1=\"" << num(yb) << "\" x2=\"" << num(x1)
        << "\" y2=\"" << num(yb) << "\"/>\n";
    svg << "<line x1=\"" << num(x0) << "\" y1=\"" << num(f.top) << "\" x2=\"" << num(x0)
        << "\" y2=\"" << num(yb) << "\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double p = i / 4.0;
        svg << "<line x1=\"" << num(f.x(p)) << "\" y1=\"" << num(yb) << "\" x2=\"" << num(f.x(p))
            << "\" y2=\"" << num(yb + 4) << "\"/>\n";
        svg << "<text x=\"" << num(f.x(p)) << "\" y=\"" << num(yb + 16)
            << "\" text-anchor=\"middle\" stroke=\"none\">" << num(p) << "</text>\n";
        const double v = f.y_min + (f.y_max - f.y_min) * i / 4.0;
        svg << "<line x1=\"" << num(x0 - 4) << "\" y1=\"" << num(f.y(v)) << "\" x2=\""
            << num(x0) << "\" y2=\"" << num(f.y(v)) << "\"/>\n";
        svg << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(f.y(v) + 4)
            << "\" text-anchor=\"end\" stroke=\"none\">" << num(v) << "</text>\n";
    }
    svg << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(yb + 36)
        << "\" text-anchor=\"middle\" stroke=\"none\">p</text>\n";
    svg << "</g>\n";

    if (options.shade) {
        // Where the shaded alternative is below the envelope.
        const std::size_t a = model.alternative_index(*options.shade);
        const Line& target = lines[a];
        std::vector<std::pair<double, double>> runs;
        for (const auto& s : env.segments) {
            if (s.line.label == target.label) {
                continue;
            }
            if (!runs.empty() && runs.back().second == s.lo) {
                runs.back().second = s.hi;
            } else {
                runs.emplace_back(s.lo, s.hi);
            }
        }
        for (const auto& [rlo, rhi] : runs) {
            svg << "<polygon class=\"shade\" data-alternative=\"" << escape(target.label)
                << "\" data-lo=\"" << num(rlo) << "\" data-hi=\"" << num(rhi)
                << "\" fill=\"" << kPalette[a % kPalette.size()]
                << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
            svg << num(f.x(rlo)) << ',' << num(f.y(evaluate_envelope(env, rlo).value));
            for (const auto& s : env.segments) {
                if (s.lo > rlo && s.lo < rhi) {
                    svg << ' ' << num(f.x(s.lo)) << ',' << num(f.y(s.line.at(s.lo)));
                }
            }
            svg << ' ' << num(f.x(rhi)) << ',' << num(f.y(evaluate_envelope(env, rhi).value));
            svg << ' ' << num(f.x(rhi)) << ',' << num(f.y(target.at(rhi)));
            svg << ' ' << num(f.x(rlo)) << ',' << num(f.y(target.at(rlo))) << "\"/>\n";
        }
    }

    if (options.ce_lines) {
        for (std::size_t a = 0; a < lines.size(); ++a) {
            const auto& l = lines[a];
            svg << "<line class=\"ce\" data-alternative=\"" << escape(l.label) << "\" x1=\""
                << num(x0) << "\" y1=\"" << num(f.y(l.at(0.0))) << "\" x2=\"" << num(x1)
                << "\" y2=\"" << num(f.y(l.at(1.0))) << "\" stroke=\""
                << kPalette[a % kPalette.size()] << "\" stroke-width=\"1.5\"/>\n";
            svg << "<text class=\"label\" x=\"" << num(x1 + 6) << "\" y=\""
                << num(f.y(l.at(1.0)) + 4) << "\" font-family=\"sans-serif\" font-size=\"11\" "
                << "fill=\"" << kPalette[a % kPalette.size()] << "\">" << escape(l.label)
                << "</text>\n";
        }
    }

    if (options.envelope) {
        svg << "<path class=\"envelope\" fill=\"none\" stroke=\"black\" stroke-width=\"3\" "
               "stroke-opacity=\"0.6\" d=\"M "
            << num(f.x(0.0)) << ' ' << num(f.y(env.segments.front().line.at(0.0)));
        for (const auto& s : env.segments) {
            svg << " L " << num(f.x(s.hi)) << ' ' << num(f.y(s.line.at(s.hi)));
        }
        svg << "\"/>\n";
        for (double b : env.breakpoints()) {
            svg << "<circle class=\"breakpoint\" data-p=\"" << num(b) << "\" cx=\"" << num(f.x(b))
                << "\" cy=\"" << num(f.y(evaluate_envelope(env, b).value))
                << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }

    if (options.clairvoyance) {
        svg << "<line class=\"clairvoyance\" x1=\"" << num(x0) << "\" y1=\""
            << num(f.y(clairvoyant.at(0.0))) << "\" x2=\"" << num(x1) << "\" y2=\""
            << num(f.y(clairvoyant.at(1.0)))
            << "\" stroke=\"gray\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
        svg << "<text class=\"label\" x=\"" << num(x1 + 6) << "\" y=\""
            << num(f.y(clairvoyant.at(1.0)) - 6)
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"gray\">clairvoyance</text>\n";
    }

    for (const auto& s : shifted) {
        svg << "<line class=\"shifted\" data-alternative=\"" << escape(s.line.label) << "\" x1=\""
            << num(x0) << "\" y1=\"" << num(f.y(s.line.at(0.0))) << "\" x2=\"" << num(x1)
            << "\" y2=\"" << num(f.y(s.line.at(1.0))) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"1\" stroke-dasharray=\"3 3\"/>\n";
    }

    if (options.prior_marker) {
        const double p0 = *options.prior_marker;
        svg << "<line class=\"prior\" data-p=\"" << num(p0) << "\" x1=\"" << num(f.x(p0))
            << "\" y1=\"" << num(f.top) << "\" x2=\"" << num(f.x(p0)) << "\" y2=\"" << num(yb)
            << "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"2 4\"/>\n";
        svg << "<text x=\"" << num(f.x(p0) + 4) << "\" y=\"" << num(f.top + 12)
            << "\" font-family=\"sans-serif\" font-size=\"11\">p0</text>\n";
    }

    if (options.two_stage && commitment != nullptr) {
        const auto& ts = *options.two_stage;
        if (commitment->observes_evidence) {
            const auto marginals = preposterior(ts.prior, ts.evidence);
            for (std::size_t e = 0; e < marginals.size(); ++e) {
                if (marginals[e] <= 1e-15) {
                    continue;
                }
                const auto& outcome = ts.evidence.outcomes[e];
                const auto choice = revision_policy(ts, *commitment, outcome);
                const double p = project_to_family(family, posterior(ts.prior, ts.evidence, outcome));
                svg << "<circle class=\"posterior\" data-evidence=\"" << escape(outcome)
                    << "\" data-p=\"" << num(p) << "\" cx=\"" << num(f.x(p)) << "\" cy=\""
                    << num(f.y(choice.net)) << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
            }
        }
        const double p0 = options.prior_marker.value_or(project_to_family(family, ts.prior));
        const PolicyReport report = flexibility_value(ts, *commitment);
        svg << "<line class=\"gap\" data-commitment=\"" << escape(commitment->label)
            << "\" x1=\"" << num(f.x(p0)) << "\" y1=\"" << num(f.y(report.baseline))
            << "\" x2=\"" << num(f.x(p0)) << "\" y2=\"" << num(f.y(report.value_with_flexibility))
            << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
        svg << "<text x=\"" << num(f.x(p0) + 5) << "\" y=\""
            << num((f.y(report.baseline) + f.y(report.value_with_flexibility)) / 2 + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">F = "
            << num(report.flexibility_value) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace flexval
