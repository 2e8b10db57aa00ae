#include "flexval/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace flexval {

namespace {

using ojson = nlohmann::ordered_json;

std::string format_probability(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& label : labels) {
        out += (out.empty() ? "" : ", ") + label;
    }
    return out;
}

std::vector<std::pair<std::string, double>> ascending(const BrittlenessReport& report) {
    auto ranking = report.values;
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    return ranking;
}

std::string policy_text(const PolicyReport& report) {
    std::string out = "commitment: " + report.commitment + "\n";
    for (const auto& row : report.rows) {
        out += "  evidence " + row.evidence + " p=" + format_probability(row.probability) +
               " -> " + row.action + " " + format_money(row.net) + "\n";
    }
    out += "value with flexibility: " + format_money(report.value_with_flexibility) + "\n";
    out += "baseline: " + format_money(report.baseline) + "\n";
    out += "flexibility value: " + format_money(report.flexibility_value) + "\n";
    return out;
}

}  // namespace

std::string format_money(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    std::string out = buf;
    if (out == "-0.00") {
        out = "0.00";
    }
    return out;
}

ojson to_json(const MeuResult& result) {
    return ojson{{"best", result.best}, {"value", result.value}};
}

ojson to_json(const Envelope& env) {
    auto segments = ojson::array();
    for (const auto& s : env.segments) {
        segments.push_back({{"lo", s.lo},
                            {"hi", s.hi},
                            {"alternative", s.line.label},
                            {"intercept", s.line.intercept},
                            {"slope", s.line.slope}});
    }
    return ojson{{"breakpoints", env.breakpoints()}, {"segments", std::move(segments)}};
}

ojson to_json(const BrittlenessReport& report) {
    auto ranking = ojson::array();
    for (const auto& [label, value] : ascending(report)) {
        ranking.push_back({{"alternative", label}, {"value", value}});
    }
    return ojson{{"definition", std::string(to_string(report.kind))},
                 {"ranking", std::move(ranking)},
                 {"least_brittle", report.least_brittle}};
}

ojson to_json(const PolicyReport& report) {
    auto rows = ojson::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"evidence", row.evidence},
                        {"probability", row.probability},
                        {"action", row.action},
                        {"net", row.net}});
    }
    return ojson{{"commitment", report.commitment},
                 {"rows", std::move(rows)},
                 {"value_with_flexibility", report.value_with_flexibility},
                 {"baseline", report.baseline},
                 {"flexibility_value", report.flexibility_value}};
}

std::string render_report(const MeuResult& result, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return to_json(result).dump() + "\n";
    }
    return "best: " + join_labels(result.best) + "\nvalue: " + format_money(result.value) + "\n";
}

std::string render_report(const Envelope& env, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return to_json(env).dump() + "\n";
    }
    std::string out;
    for (const auto& s : env.segments) {
        out += "[" + format_probability(s.lo) + ", " + format_probability(s.hi) + "] " +
               s.line.label + " " + format_money(s.line.intercept) +
               (s.line.slope < 0.0 ? " - " : " + ") + format_money(std::abs(s.line.slope)) +
               "p\n";
    }
    return out;
}

std::string render_report(const BrittlenessReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return to_json(report).dump() + "\n";
    }
    std::string out = "brittleness (" + std::string(to_string(report.kind)) + ")\n";
    for (const auto& [label, value] : ascending(report)) {
        out += label + " " + format_money(value) + "\n";
    }
    out += "least brittle: " + join_labels(report.least_brittle) + "\n";
    return out;
}

std::string render_report(const PolicyReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return to_json(report).dump() + "\n";
    }
    return policy_text(report);
}

std::string render_report(const std::vector<PolicyReport>& reports,
                          const std::optional<std::pair<std::string, double>>& most_flexible,
                          ReportFormat format) {
    if (format == ReportFormat::Json) {
        auto list = ojson::array();
        for (const auto& r : reports) {
            list.push_back(to_json(r));
        }
        ojson doc{{"commitments", std::move(list)}};
        if (most_flexible) {
            doc["most_flexible"] = {{"commitment", most_flexible->first},
                                    {"flexibility_value", most_flexible->second}};
        } else {
            doc["most_flexible"] = nullptr;
        }
        return doc.dump() + "\n";
    }
    std::string out;
    for (const auto& r : reports) {
        out += policy_text(r);
    }
    out += "most flexible: " +
           (most_flexible ? most_flexible->first + " " + format_money(most_flexible->second)
                          : std::string("none")) +
           "\n";
    return out;
}

}  // namespace flexval
