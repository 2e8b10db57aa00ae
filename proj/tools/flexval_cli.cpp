// Command-line front end: one subcommand per analysis.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flexval/error.hpp"
#include "flexval/model_file.hpp"
#include "flexval/oracle.hpp"
#include "flexval/report.hpp"
#include "flexval/static_flex.hpp"
#include "flexval/svg.hpp"

namespace {

using flexval::Error;
using flexval::ErrorKind;
using flexval::ReportFormat;
using ojson = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitComputation = 4;

struct CommonOptions {
    std::string model_path;
    std::optional<double> p;
    bool verify = false;
    std::string format = "text";
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidModel:
        case ErrorKind::Syntax:
        case ErrorKind::Schema:
            return kExitValidation;
        case ErrorKind::UnknownLabel:
        case ErrorKind::OutOfRange:
        case ErrorKind::MissingDistribution:
            return kExitUsage;
        default:
            return kExitComputation;
    }
}

void print_error(std::string_view kind, const std::string& message) {
    std::cerr << ojson{{"error", std::string(kind)}, {"message", message}}.dump() << '\n';
}

flexval::ParsedModel load(const CommonOptions& opts) {
    std::ifstream in(opts.model_path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::OutOfRange, "cannot read model file '" + opts.model_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto parsed = flexval::parse_model(buffer.str());
    if (opts.p) {
        parsed = flexval::with_prior(std::move(parsed), *opts.p);
    }
    return parsed;
}

ReportFormat format_of(const CommonOptions& opts) {
    return opts.format == "json" ? ReportFormat::Json : ReportFormat::Text;
}

std::string with_verify(ojson doc, std::string text, ReportFormat format,
                        std::optional<double> deviation) {
    if (format == ReportFormat::Json) {
        if (deviation) {
            doc["verify"] = {{"max_deviation", *deviation}};
        }
        return doc.dump() + "\n";
    }
    if (deviation) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "verify: max deviation %.3e\n", *deviation);
        text += buf;
    }
    return text;
}

std::function<double(double)> envelope_fn(const std::vector<flexval::Line>& lines) {
    return [&lines](double p) {
        double best = lines.front().at(p);
        for (const auto& l : lines) {
            best = std::max(best, l.at(p));
        }
        return best;
    };
}

std::string run_meu(const CommonOptions& opts) {
    const auto parsed = load(opts);
    const auto dist = flexval::distribution_at(parsed.family, parsed.prior_p);
    const auto result = flexval::meu(parsed.model, dist);
    std::optional<double> deviation;
    if (opts.verify) {
        const auto lines = flexval::ce_lines(parsed.model, parsed.family);
        deviation = std::abs(envelope_fn(lines)(parsed.prior_p) - result.value);
    }
    return with_verify(flexval::to_json(result), flexval::render_report(result, format_of(opts)),
                       format_of(opts), deviation);
}

std::string run_envelope(const CommonOptions& opts) {
    const auto parsed = load(opts);
    const auto lines = flexval::ce_lines(parsed.model, parsed.family);
    const auto env = flexval::upper_envelope(lines);
    std::optional<double> deviation;
    if (opts.verify) {
        deviation = std::abs(flexval::oracle::quadrature(envelope_fn(lines), 0.0, 1.0) -
                             flexval::integrate_envelope(env, 0.0, 1.0));
    }
    return with_verify(flexval::to_json(env), flexval::render_report(env, format_of(opts)),
                       format_of(opts), deviation);
}

std::string run_brittleness(const CommonOptions& opts, const std::string& definition) {
    const auto parsed = load(opts);
    const auto kind = flexval::brittleness_kind_from(definition);
    const auto& model = parsed.model;
    flexval::BrittlenessReport report;
    std::optional<double> deviation;
    const auto lines = flexval::ce_lines(model, parsed.family);
    switch (*kind) {
        case flexval::BrittlenessKind::Outcomes: {
            const auto dist = flexval::distribution_at(parsed.family, parsed.prior_p);
            report = flexval::brittleness_outcomes(model, dist);
            if (opts.verify) {
                // Least regret equals clairvoyant value minus the MEU value.
                double clairvoyant = 0.0;
                for (std::size_t s = 0; s < model.states.size(); ++s) {
                    double best = model.payoff[0][s];
                    for (const auto& row : model.payoff) {
                        best = std::max(best, row[s]);
                    }
                    clairvoyant += dist.weights[s] * best;
                }
                double least = report.values.front().second;
                for (const auto& [_, v] : report.values) {
                    least = std::min(least, v);
                }
                deviation = std::abs(least - (clairvoyant - flexval::meu(model, dist).value));
            }
            break;
        }
        case flexval::BrittlenessKind::Belief:
        case flexval::BrittlenessKind::Clairvoyance: {
            const bool belief = *kind == flexval::BrittlenessKind::Belief;
            report = belief ? flexval::brittleness_belief(model, parsed.family)
                            : flexval::brittleness_clairvoyance(model, parsed.family);
            if (opts.verify) {
                const auto top = envelope_fn(lines);
                const auto clair = flexval::clairvoyance_line(model, parsed.family);
                double worst = 0.0;
                for (std::size_t a = 0; a < lines.size(); ++a) {
                    const auto& line = lines[a];
                    const double numeric = flexval::oracle::quadrature(
                        [&](double p) { return (belief ? top(p) : clair.at(p)) - line.at(p); },
                        0.0, 1.0);
                    worst = std::max(worst, std::abs(numeric - report.values[a].second));
                }
                deviation = worst;
            }
            break;
        }
    }
    return with_verify(flexval::to_json(report), flexval::render_report(report, format_of(opts)),
                       format_of(opts), deviation);
}

std::string run_flexvalue(const CommonOptions& opts, const std::string& commitment) {
    const auto parsed = load(opts);
    if (!parsed.two_stage) {
        throw Error(ErrorKind::Schema, "commitments: missing (flexvalue needs a two-stage model)");
    }
    const auto& ts = *parsed.two_stage;
    std::vector<flexval::PolicyReport> reports;
    if (!commitment.empty()) {
        reports.push_back(flexval::flexibility_value(ts, ts.commitment(commitment)));
    } else {
        for (const auto& c : ts.commitments) {
            reports.push_back(flexval::flexibility_value(ts, c));
        }
    }
    std::optional<double> deviation;
    if (opts.verify) {
        const auto policies = flexval::oracle::enumerate_two_stage(ts);
        double worst = 0.0;
        for (const auto& r : reports) {
            worst = std::max(worst, std::abs(flexval::oracle::best_policy(policies, r.commitment).value -
                                             r.value_with_flexibility));
        }
        deviation = worst;
    }
    const auto format = format_of(opts);
    if (!commitment.empty()) {
        return with_verify(flexval::to_json(reports.front()),
                           flexval::render_report(reports.front(), format), format, deviation);
    }
    const auto best = flexval::most_flexible_commitment(ts);
    const std::string text = flexval::render_report(reports, best, format);
    return with_verify(format == ReportFormat::Json ? ojson::parse(text) : ojson{}, text, format,
                       deviation);
}

std::string run_plot(const CommonOptions& opts, const std::vector<std::string>& layers,
                     const std::string& shade, const std::string& commitment,
                     const std::string& out_path) {
    const auto parsed = load(opts);
    flexval::SvgOptions svg;
    svg.ce_lines = svg.envelope = false;
    for (const auto& layer : layers) {
        if (layer == "ce") {
            svg.ce_lines = true;
        } else if (layer == "envelope") {
            svg.envelope = true;
        } else if (layer == "clairvoyance") {
            svg.clairvoyance = true;
        } else if (layer == "prior") {
            svg.prior_marker = parsed.prior_p;
        } else if (layer == "two-stage") {
            if (!parsed.two_stage) {
                throw Error(ErrorKind::Schema, "commitments: missing (two-stage layer)");
            }
            svg.two_stage = parsed.two_stage;
            svg.prior_marker = parsed.prior_p;
            if (!commitment.empty()) {
                svg.commitment = commitment;
            }
        }
    }
    if (!shade.empty()) {
        svg.shade = shade;
    }
    const std::string document = flexval::render_svg(parsed.model, parsed.family, svg);
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << document)) {
        throw Error(ErrorKind::OutOfRange, "cannot write '" + out_path + "'");
    }
    if (format_of(opts) == ReportFormat::Json) {
        return ojson{{"svg", out_path}, {"bytes", document.size()}}.dump() + "\n";
    }
    return "wrote " + out_path + " (" + std::to_string(document.size()) + " bytes)\n";
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--model", opts.model_path, "Model file (JSON)")->required();
    cmd->add_option("--p", opts.p, "Override the belief parameter")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--verify", opts.verify, "Cross-check against the brute-force oracles");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision flexibility analysis"};
    app.require_subcommand(1);

    CommonOptions opts;
    auto* meu_cmd = app.add_subcommand("meu", "Maximum expected value alternative");
    add_common(meu_cmd, opts);
    auto* env_cmd = app.add_subcommand("envelope", "Upper envelope of certainty-equivalent lines");
    add_common(env_cmd, opts);

    std::string definition;
    auto* brit_cmd = app.add_subcommand("brittleness", "Brittleness of every alternative");
    add_common(brit_cmd, opts);
    brit_cmd->add_option("--def", definition, "outcomes | belief | clairvoyance")
        ->required()
        ->check(CLI::IsMember({"outcomes", "belief", "clairvoyance"}));

    std::string commitment;
    auto* flex_cmd = app.add_subcommand("flexvalue", "Flexibility value of commitments");
    add_common(flex_cmd, opts);
    flex_cmd->add_option("--commitment", commitment, "Report a single commitment");

    std::vector<std::string> layers{"ce", "envelope"};
    std::string shade;
    std::string out_path;
    auto* plot_cmd = app.add_subcommand("plot", "Write an SVG of the envelope geometry");
    add_common(plot_cmd, opts);
    plot_cmd->add_option("--layers", layers, "ce,envelope,clairvoyance,prior,two-stage")
        ->delimiter(',')
        ->check(CLI::IsMember({"ce", "envelope", "clairvoyance", "prior", "two-stage"}));
    plot_cmd->add_option("--shade", shade, "Shade this alternative's shortfall");
    plot_cmd->add_option("--commitment", commitment, "Commitment for the two-stage layer");
    plot_cmd->add_option("--out", out_path, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage", e.what());
        return kExitUsage;
    }

    try {
        std::string output;
        if (meu_cmd->parsed()) {
            output = run_meu(opts);
        } else if (env_cmd->parsed()) {
            output = run_envelope(opts);
        } else if (brit_cmd->parsed()) {
            output = run_brittleness(opts, definition);
        } else if (flex_cmd->parsed()) {
            output = run_flexvalue(opts, commitment);
        } else {
            output = run_plot(opts, layers, shade, commitment, out_path);
        }
        std::cout << output;
    } catch (const Error& e) {
        print_error(flexval::to_string(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return kExitComputation;
    }
    return 0;
}
