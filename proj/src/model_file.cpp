#include "flexval/model_file.hpp"

#include <algorithm>
#include <cmath>

#include "flexval/error.hpp"

namespace flexval {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorKind::Schema, path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(path.empty() ? key : path + "." + key, "missing");
    }
    return *it;
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

double number(const json& value, const std::string& path) {
    if (!value.is_number()) {
        schema_error(path, "expected a number");
    }
    const double d = value.get<double>();
    if (!std::isfinite(d)) {
        schema_error(path, "expected a finite number");
    }
    return d;
}

std::string string_value(const json& value, const std::string& path) {
    if (!value.is_string()) {
        schema_error(path, "expected a string");
    }
    return value.get<std::string>();
}

std::vector<std::string> labels(const json& value, const std::string& path) {
    if (!value.is_array()) {
        schema_error(path, "expected an array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(string_value(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<double> numbers(const json& value, const std::string& path, std::size_t expected) {
    if (!value.is_array()) {
        schema_error(path, "expected an array of numbers");
    }
    if (value.size() != expected) {
        schema_error(path, "expected " + std::to_string(expected) + " entries, got " +
                               std::to_string(value.size()));
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(number(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::vector<double>> matrix(const json& value, const std::string& path,
                                        std::size_t rows, std::size_t cols) {
    if (!value.is_array()) {
        schema_error(path, "expected an array of rows");
    }
    if (value.size() != rows) {
        schema_error(path, "expected " + std::to_string(rows) + " rows, got " +
                               std::to_string(value.size()));
    }
    std::vector<std::vector<double>> out;
    for (std::size_t r = 0; r < rows; ++r) {
        out.push_back(numbers(value[r], path + "[" + std::to_string(r) + "]", cols));
    }
    return out;
}

Distribution distribution(const json& value, const std::string& path,
                          const std::vector<std::string>& states) {
    Distribution dist{states, numbers(value, path, states.size())};
    if (auto v = validate_distribution(dist, states); !v.empty()) {
        schema_error(path, format_violations(v));
    }
    return dist;
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        schema_error(path.empty() ? "<document>" : path, "expected an object");
    }
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            schema_error(join(path, key), "unknown key");
        }
    }
}

BeliefFamily belief(const json& value, const std::vector<std::string>& states, double& p) {
    const std::string path = "belief";
    if (!value.is_object()) {
        schema_error(path, "expected an object");
    }
    const std::string kind = string_value(member(value, "kind", path), "belief.kind");
    BeliefFamily family;
    if (kind == "bernoulli") {
        check_keys(value, path, {"kind", "success_state", "failure_state", "p"});
        if (states.size() != 2 && !value.contains("failure_state")) {
            schema_error("belief.failure_state", "required when there are not exactly two states");
        }
        const std::string success =
            string_value(member(value, "success_state", path), "belief.success_state");
        std::string failure;
        if (value.contains("failure_state")) {
            failure = string_value(value["failure_state"], "belief.failure_state");
        } else {
            failure = states[0] == success ? states[1] : states[0];
        }
        for (const auto& [key, label] : {std::pair{"belief.success_state", success},
                                         std::pair{"belief.failure_state", failure}}) {
            if (std::find(states.begin(), states.end(), label) == states.end()) {
                schema_error(key, "unknown state '" + label + "'");
            }
        }
        if (success == failure) {
            schema_error("belief.failure_state", "must differ from success_state");
        }
        family = BeliefFamily::bernoulli(states, success, failure);
    } else if (kind == "mixture") {
        check_keys(value, path, {"kind", "endpoint0", "endpoint1", "p"});
        family.endpoint0 = distribution(member(value, "endpoint0", path), "belief.endpoint0", states);
        family.endpoint1 = distribution(member(value, "endpoint1", path), "belief.endpoint1", states);
    } else {
        schema_error("belief.kind", "expected \"bernoulli\" or \"mixture\"");
    }
    p = number(member(value, "p", path), "belief.p");
    if (p < 0.0 || p > 1.0) {
        schema_error("belief.p", "must lie in [0,1]");
    }
    return family;
}

EvidenceModel evidence(const json& value, std::size_t state_count) {
    const std::string path = "evidence";
    check_keys(value, path, {"outcomes", "likelihood", "info_cost"});
    EvidenceModel ev;
    ev.outcomes = labels(member(value, "outcomes", path), "evidence.outcomes");
    ev.likelihood = matrix(member(value, "likelihood", path), "evidence.likelihood", state_count,
                           ev.outcomes.size());
    ev.info_cost = value.contains("info_cost") ? number(value["info_cost"], "evidence.info_cost")
                                               : 0.0;
    if (auto v = validate_evidence(ev, state_count); !v.empty()) {
        // Every evidence violation already names its evidence.* key.
        throw Error(ErrorKind::Schema, format_violations(v));
    }
    return ev;
}

std::vector<Commitment> commitments(const json& value) {
    if (!value.is_array()) {
        schema_error("commitments", "expected an array");
    }
    std::vector<Commitment> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string path = "commitments[" + std::to_string(i) + "]";
        const json& item = value[i];
        check_keys(item, path,
                   {"label", "initial_action", "revision_targets", "switch_cost",
                    "observes_evidence"});
        Commitment c;
        c.label = string_value(member(item, "label", path), join(path, "label"));
        c.initial_action =
            string_value(member(item, "initial_action", path), join(path, "initial_action"));
        if (item.contains("revision_targets")) {
            c.revision_targets = labels(item["revision_targets"], join(path, "revision_targets"));
        }
        if (item.contains("switch_cost")) {
            c.switch_cost = number(item["switch_cost"], join(path, "switch_cost"));
        }
        if (item.contains("observes_evidence")) {
            if (!item["observes_evidence"].is_boolean()) {
                schema_error(join(path, "observes_evidence"), "expected a boolean");
            }
            c.observes_evidence = item["observes_evidence"].get<bool>();
        } else {
            c.observes_evidence = !c.revision_targets.empty();
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

ParsedModel parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        // Locate the failing byte as line/column.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t limit = std::min(err.byte == 0 ? 0 : err.byte - 1, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": invalid JSON");
    }

    check_keys(doc, "", {"states", "alternatives", "payoffs", "belief", "evidence", "commitments"});
    ParsedModel parsed;
    parsed.model.states = labels(member(doc, "states", ""), "states");
    parsed.model.alternatives = labels(member(doc, "alternatives", ""), "alternatives");
    parsed.model.payoff = matrix(member(doc, "payoffs", ""), "payoffs",
                                 parsed.model.alternatives.size(), parsed.model.states.size());
    require_valid(parsed.model);

    parsed.family = belief(member(doc, "belief", ""), parsed.model.states, parsed.prior_p);

    if (doc.contains("evidence")) {
        parsed.evidence = evidence(doc["evidence"], parsed.model.states.size());
    }
    if (doc.contains("commitments")) {
        if (!parsed.evidence) {
            schema_error("evidence", "required when commitments are given");
        }
        TwoStageModel ts{parsed.model, distribution_at(parsed.family, parsed.prior_p),
                         *parsed.evidence, commitments(doc["commitments"])};
        require_valid(ts);
        parsed.two_stage = std::move(ts);
    }
    return parsed;
}

ParsedModel with_prior(ParsedModel parsed, double p) {
    const Distribution prior = distribution_at(parsed.family, p);
    parsed.prior_p = p;
    if (parsed.two_stage) {
        parsed.two_stage->prior = prior;
    }
    return parsed;
}

nlohmann::ordered_json model_to_json(const ParsedModel& parsed) {
    nlohmann::ordered_json doc;
    doc["states"] = parsed.model.states;
    doc["alternatives"] = parsed.model.alternatives;
    doc["payoffs"] = parsed.model.payoff;
    doc["belief"] = {{"kind", "mixture"},
                     {"endpoint0", parsed.family.endpoint0.weights},
                     {"endpoint1", parsed.family.endpoint1.weights},
                     {"p", parsed.prior_p}};
    if (parsed.evidence) {
        doc["evidence"] = {{"outcomes", parsed.evidence->outcomes},
                           {"likelihood", parsed.evidence->likelihood},
                           {"info_cost", parsed.evidence->info_cost}};
    }
    if (parsed.two_stage) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& c : parsed.two_stage->commitments) {
            list.push_back({{"label", c.label},
                            {"initial_action", c.initial_action},
                            {"revision_targets", c.revision_targets},
                            {"switch_cost", c.switch_cost},
                            {"observes_evidence", c.observes_evidence}});
        }
        doc["commitments"] = std::move(list);
    }
    return doc;
}

}  // namespace flexval
