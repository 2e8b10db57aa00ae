#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flexval/dynamic_flex.hpp"
#include "flexval/envelope.hpp"
#include "flexval/static_flex.hpp"

namespace flexval {

enum class ReportFormat { Text, Json };

// Two decimals, ties to even on the exact binary value; never "-0.00".
std::string format_money(double value);

// Structured reports carry full precision and a fixed key order. Text
// reports print money with format_money. Every document ends in a newline.
nlohmann::ordered_json to_json(const MeuResult& result);
nlohmann::ordered_json to_json(const Envelope& env);
nlohmann::ordered_json to_json(const BrittlenessReport& report);
nlohmann::ordered_json to_json(const PolicyReport& report);

std::string render_report(const MeuResult& result, ReportFormat format);
std::string render_report(const Envelope& env, ReportFormat format);
// Ascending brittleness with the least-brittle set.
std::string render_report(const BrittlenessReport& report, ReportFormat format);
std::string render_report(const PolicyReport& report, ReportFormat format);
std::string render_report(const std::vector<PolicyReport>& reports,
                          const std::optional<std::pair<std::string, double>>& most_flexible,
                          ReportFormat format);

}  // namespace flexval
