#include "flexval/oracle.hpp"

#include <algorithm>

#include "flexval/error.hpp"

namespace flexval::oracle {

double quadrature(const std::function<double(double)>& f, double lo, double hi,
                  const QuadratureSpec& spec) {
    if (!(lo <= hi)) {
        throw Error(ErrorKind::BadInterval, "quadrature interval reversed");
    }
    if (spec.panel_count == 0) {
        throw Error(ErrorKind::OutOfRange, "quadrature needs at least one panel");
    }
    const double width = (hi - lo) / static_cast<double>(spec.panel_count);
    double total = 0.0;
    if (spec.rule == QuadratureRule::Midpoint) {
        for (std::size_t i = 0; i < spec.panel_count; ++i) {
            total += f(lo + (static_cast<double>(i) + 0.5) * width);
        }
    } else {
        total = 0.5 * (f(lo) + f(hi));
        for (std::size_t i = 1; i < spec.panel_count; ++i) {
            total += f(lo + static_cast<double>(i) * width);
        }
    }
    return total * width;
}

std::vector<PolicyValue> enumerate_two_stage(const TwoStageModel& ts) {
    require_valid(ts);
    const auto& model = ts.base;
    const std::size_t n_states = model.states.size();
    const std::size_t n_outcomes = ts.evidence.outcomes.size();

    std::size_t total_policies = 0;
    for (const auto& c : ts.commitments) {
        std::size_t count = 1;
        if (c.observes_evidence) {
            const std::size_t options = 1 + c.revision_targets.size();
            for (std::size_t e = 0; e < n_outcomes; ++e) {
                count *= options;
                if (count > kMaxPolicies) {
                    break;
                }
            }
        }
        total_policies += count;
        if (total_policies > kMaxPolicies) {
            throw Error(ErrorKind::PolicyExplosion,
                        "more than " + std::to_string(kMaxPolicies) + " contingency policies");
        }
    }

    std::vector<PolicyValue> out;
    out.reserve(total_policies);
    for (const auto& c : ts.commitments) {
        std::vector<std::string> options{c.initial_action};
        options.insert(options.end(), c.revision_targets.begin(), c.revision_targets.end());
        std::vector<std::size_t> rows;
        for (const auto& option : options) {
            rows.push_back(model.alternative_index(option));
        }

        if (!c.observes_evidence) {
            double value = 0.0;
            for (std::size_t s = 0; s < n_states; ++s) {
                value += ts.prior.weights[s] * model.payoff[rows[0]][s];
            }
            out.push_back({c.label, {c.initial_action}, value});
            continue;
        }

        // Odometer over choice[e] in [0, options.size()).
        std::vector<std::size_t> choice(n_outcomes, 0);
        while (true) {
            double value = 0.0;
            for (std::size_t e = 0; e < n_outcomes; ++e) {
                const std::size_t row = rows[choice[e]];
                const double switch_cost = choice[e] == 0 ? 0.0 : c.switch_cost;
                for (std::size_t s = 0; s < n_states; ++s) {
                    const double joint = ts.prior.weights[s] * ts.evidence.likelihood[s][e];
                    value += joint * (model.payoff[row][s] - switch_cost - ts.evidence.info_cost);
                }
            }
            PolicyValue pv{c.label, {}, value};
            for (std::size_t e = 0; e < n_outcomes; ++e) {
                pv.policy.push_back(options[choice[e]]);
            }
            out.push_back(std::move(pv));

            std::size_t e = 0;
            while (e < n_outcomes && ++choice[e] == options.size()) {
                choice[e] = 0;
                ++e;
            }
            if (e == n_outcomes) {
                break;
            }
        }
    }
    return out;
}

PolicyValue best_policy(const std::vector<PolicyValue>& values, const std::string& commitment) {
    const PolicyValue* best = nullptr;
    for (const auto& pv : values) {
        if (pv.commitment == commitment && (best == nullptr || pv.value > best->value)) {
            best = &pv;
        }
    }
    if (best == nullptr) {
        throw Error(ErrorKind::UnknownLabel, "no policies for commitment '" + commitment + "'");
    }
    return *best;
}

}  // namespace flexval::oracle
