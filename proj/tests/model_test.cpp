#include "flexval/model.hpp"

#include <gtest/gtest.h>

#include "flexval/error.hpp"
#include "party_fixture.hpp"

namespace flexval {
namespace {

using testing::party_family;
using testing::party_model;

bool has_violation(const ValidationResult& v, const std::string& what) {
    for (const auto& item : v) {
        if (item.what == what) return true;
    }
    return false;
}

TEST(ModelTest, PartyModelIsValid) { EXPECT_TRUE(validate_model(party_model()).empty()); }

TEST(ModelTest, DuplicateAlternativeIsReported) {
    auto m = party_model();
    m.alternatives[2] = "porch";
    const auto v = validate_model(m);
    ASSERT_TRUE(has_violation(v, "duplicate label"));
    EXPECT_NE(format_violations(v).find("porch"), std::string::npos);
}

TEST(ModelTest, MissingPayoffIsReported) {
    auto m = party_model();
    m.payoff[2].pop_back();
    const auto v = validate_model(m);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].what, "incomplete payoff table");
    EXPECT_EQ(v[0].where, "(indoors, rain)");
}

TEST(ModelTest, EveryViolationIsListed) {
    DecisionModel m{{"a", "a", ""}, {}, {}};
    const auto v = validate_model(m);
    EXPECT_TRUE(has_violation(v, "duplicate label"));
    EXPECT_TRUE(has_violation(v, "empty label"));
    EXPECT_TRUE(has_violation(v, "empty label list"));
}

TEST(ModelTest, NonFinitePayoffIsReported) {
    auto m = party_model();
    m.payoff[0][1] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_TRUE(has_violation(validate_model(m), "non-finite payoff"));
}

TEST(ModelTest, PayoffLookup) {
    const auto m = party_model();
    EXPECT_EQ(payoff(m, "outdoors", "sun"), 100.0);
    EXPECT_EQ(payoff(m, "indoors", "rain"), 50.0);
    try {
        payoff(m, "picnic", "sun");
        FAIL() << "expected unknown label";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
        EXPECT_NE(std::string(e.what()).find("picnic"), std::string::npos);
    }
}

TEST(ModelTest, DistributionAtEndpoints) {
    const auto family = party_family();
    EXPECT_EQ(distribution_at(family, 0.0), family.endpoint0);
    EXPECT_EQ(distribution_at(family, 1.0), family.endpoint1);
}

TEST(ModelTest, BernoulliAtPointEight) {
    const auto d = distribution_at(party_family(), 0.8);
    EXPECT_NEAR(d.weight("sun"), 0.8, 1e-12);
    EXPECT_NEAR(d.weight("rain"), 0.2, 1e-12);
}

TEST(ModelTest, DistributionAtRejectsOutOfRange) {
    const auto family = party_family();
    for (double p : {-0.01, 1.01, std::numeric_limits<double>::quiet_NaN()}) {
        try {
            distribution_at(family, p);
            FAIL() << p;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
        }
    }
}

TEST(ModelTest, MixtureStaysNormalisedOnDenseGrid) {
    testing::RandomModels gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto states = gen.model(1, gen.count(2, 6)).states;
        const auto family = gen.family(states);
        for (int i = 0; i <= 1000; ++i) {
            const auto d = distribution_at(family, i / 1000.0);
            double total = 0.0;
            for (double w : d.weights) {
                EXPECT_GE(w, 0.0);
                EXPECT_LE(w, 1.0);
                total += w;
            }
            EXPECT_NEAR(total, 1.0, 1e-9);
        }
    }
}

TEST(ModelTest, DistributionValidation) {
    const std::vector<std::string> states{"sun", "rain"};
    EXPECT_TRUE(validate_distribution({states, {0.3, 0.7}}, states).empty());
    EXPECT_FALSE(validate_distribution({states, {0.3, 0.6}}, states).empty());
    EXPECT_FALSE(validate_distribution({states, {-0.1, 1.1}}, states).empty());
    EXPECT_FALSE(validate_distribution({{"rain", "sun"}, {0.3, 0.7}}, states).empty());
}

TEST(ModelTest, BernoulliNeedsDistinctStates) {
    EXPECT_THROW(BeliefFamily::bernoulli({"sun", "rain"}, "sun", "sun"), Error);
    EXPECT_THROW(BeliefFamily::bernoulli({"sun", "rain"}, "sun", "snow"), Error);
}

}  // namespace
}  // namespace flexval
