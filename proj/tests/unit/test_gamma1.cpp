#include <gtest/gtest.h>

#include <cmath>

#include "qdirac/errors.hpp"
#include "qdirac/gamma1.hpp"

using namespace qdirac;

TEST(FitGrowth, Classification) {
    const double q = 0.5;
    const std::vector<int> ks = {8, 12, 16};
    EXPECT_EQ(fit_growth(ks, {2.0, 2.0, 2.0}, q).growth, Growth::bounded);
    EXPECT_EQ(fit_growth(ks, {0.0, 0.0, 0.0}, q).growth, Growth::zero);
    const GrowthFit g = fit_growth(ks, {std::pow(2.0, 8), std::pow(2.0, 12), std::pow(2.0, 16)}, q);
    EXPECT_EQ(g.growth, Growth::growing);
    EXPECT_NEAR(g.slope, std::log(2.0), 1e-12);
    EXPECT_EQ(fit_growth(ks, {1.0, std::exp(0.6), std::exp(1.2)}, q).growth, Growth::inconclusive);
    EXPECT_EQ(fit_growth({16}, {3.0}, q).growth, Growth::inconclusive);
}

TEST(Gamma1, GeneratorACollapsedBoundedTwoSidedGrowing) {
    DiracConfig c;
    c.M = 2;
    const Gamma1Report r = gamma1_report(c, su2::a, {8, 12, 16});
    bool saw_collapsed = false, saw_commutator = false;
    for (const auto& s : r.series) {
        if (s.name == "H(phi)" && s.reading == Reading::collapsed) {
            EXPECT_EQ(s.fit.growth, Growth::bounded);
            saw_collapsed = true;
        }
        if (s.name == "[D,phi]") {
            EXPECT_EQ(s.fit.growth, Growth::growing);
            saw_commutator = true;
        }
    }
    EXPECT_TRUE(saw_collapsed);
    EXPECT_TRUE(saw_commutator);
    for (const auto& o : r.oracle) EXPECT_LE(o.relative(), 1e-10);
}

TEST(Gamma1, UnitHasZeroCommutator) {
    DiracConfig c;
    c.M = 2;
    const Gamma1Report r = gamma1_report(c, su2::one, {8, 12});
    for (const auto& s : r.series) EXPECT_EQ(s.fit.growth, Growth::zero) << s.name;
}

TEST(Gamma1, ElementSpan) {
    const DiscGrid g(0.5, 8);
    EXPECT_EQ(element_span(su2::a(g)), 1);
    EXPECT_EQ(element_span(mul(su2::c(g), su2::c(g))), 2);
    EXPECT_EQ(element_span(su2::one(g)), 0);
}

TEST(Gamma1, TwistTwoDomainError) {
    DiracConfig c;
    c.twist = 2;
    c.M = 2;
    EXPECT_THROW(gamma1_report(c, su2::c, {8}), DomainError);
}
