#pragma once

#include <cmath>
#include <random>

#include "flexval/dynamic_flex.hpp"
#include "flexval/model.hpp"

namespace flexval::testing {

// payoffs: outdoors (100, 0), porch (90, 20), indoors (40, 50) over (sun, rain)
inline DecisionModel party_model() {
    return {{"sun", "rain"},
            {"outdoors", "porch", "indoors"},
            {{100.0, 0.0}, {90.0, 20.0}, {40.0, 50.0}}};
}

inline BeliefFamily party_family() {
    return BeliefFamily::bernoulli({"sun", "rain"}, "sun", "rain");
}

inline EvidenceModel forecast(double accuracy = 0.9, double info_cost = 1.0) {
    // Rounded so that 0.9 pairs with the literal 0.1 a model file would hold.
    const double miss = std::round((1.0 - accuracy) * 1e12) / 1e12;
    return {{"sun", "rain"}, {{accuracy, miss}, {miss, accuracy}}, info_cost};
}

inline Commitment porch_option(double switch_cost = 5.0) {
    return {"porch-option", "porch", {"outdoors", "indoors"}, switch_cost, true};
}

inline TwoStageModel party_two_stage(double p_sun = 0.7) {
    return {party_model(),
            distribution_at(party_family(), p_sun),
            forecast(),
            {{"outdoors", "outdoors", {}, 0.0, false},
             {"indoors", "indoors", {}, 0.0, false},
             porch_option()}};
}

// Random model generator for property tests.
struct RandomModels {
    std::mt19937_64 rng;

    explicit RandomModels(std::uint64_t seed) : rng(seed) {}

    std::size_t count(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    DecisionModel model(std::size_t alternatives, std::size_t states) {
        DecisionModel m;
        for (std::size_t s = 0; s < states; ++s) {
            m.states.push_back("x" + std::to_string(s));
        }
        for (std::size_t a = 0; a < alternatives; ++a) {
            m.alternatives.push_back("d" + std::to_string(a));
            std::vector<double> row;
            for (std::size_t s = 0; s < states; ++s) {
                row.push_back(uniform(-100.0, 100.0));
            }
            m.payoff.push_back(std::move(row));
        }
        return m;
    }

    std::vector<double> simplex(std::size_t n) {
        std::exponential_distribution<double> exp(1.0);
        std::vector<double> w(n);
        double total = 0.0;
        for (auto& x : w) {
            x = exp(rng);
            total += x;
        }
        for (auto& x : w) {
            x /= total;
        }
        return w;
    }

    Distribution distribution(const std::vector<std::string>& states) {
        return {states, simplex(states.size())};
    }

    BeliefFamily family(const std::vector<std::string>& states) {
        return {distribution(states), distribution(states)};
    }

    EvidenceModel evidence(std::size_t states, std::size_t outcomes) {
        EvidenceModel ev;
        for (std::size_t e = 0; e < outcomes; ++e) {
            ev.outcomes.push_back("e" + std::to_string(e));
        }
        for (std::size_t s = 0; s < states; ++s) {
            ev.likelihood.push_back(simplex(outcomes));
        }
        ev.info_cost = uniform(0.0, 10.0);
        return ev;
    }

    // 2-4 alternatives, 2-3 states, 1-3 outcomes, one hard commitment per
    // alternative plus one or two soft ones.
    TwoStageModel two_stage() {
        TwoStageModel ts;
        ts.base = model(count(2, 4), count(2, 3));
        ts.prior = distribution(ts.base.states);
        ts.evidence = evidence(ts.base.states.size(), count(1, 3));
        for (const auto& a : ts.base.alternatives) {
            ts.commitments.push_back({"hard-" + a, a, {}, 0.0, false});
        }
        const std::size_t soft = count(1, 2);
        for (std::size_t k = 0; k < soft; ++k) {
            Commitment c;
            c.label = "soft-" + std::to_string(k);
            const std::size_t initial = count(0, ts.base.alternatives.size() - 1);
            c.initial_action = ts.base.alternatives[initial];
            for (std::size_t a = 0; a < ts.base.alternatives.size(); ++a) {
                if (a != initial && count(0, 3) != 0) {
                    c.revision_targets.push_back(ts.base.alternatives[a]);
                }
            }
            c.switch_cost = uniform(0.0, 20.0);
            c.observes_evidence = true;
            ts.commitments.push_back(std::move(c));
        }
        return ts;
    }
};

}  // namespace flexval::testing
