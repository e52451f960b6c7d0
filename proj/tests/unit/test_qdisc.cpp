#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qdirac/errors.hpp"
#include "qdirac/qdisc.hpp"
#include "qdirac/random.hpp"

using namespace qdirac;

namespace {

constexpr double kTol = 1e-12;

class DiscRelations : public ::testing::TestWithParam<double> {};

}  // namespace

TEST_P(DiscRelations, CommutationRelations) {
    const double q = GetParam();
    const DiscGrid g(q, 48);
    const DiscElement z = disc::z(g), zs = disc::z_star(g), y = disc::y(g), one = disc::one(g);
    EXPECT_LE(max_abs_difference(mul(z, zs) - (q * q) * mul(zs, z), (1.0 - q * q) * one), kTol);
    EXPECT_LE(max_abs_difference(mul(zs, z), one - mul(y, y)), kTol);
    EXPECT_LE(max_abs_difference(mul(z, zs), one - (q * q) * mul(y, y)), kTol);
    EXPECT_LE(max_abs_difference(mul(z, y), q * mul(y, z)), kTol);
    EXPECT_LE(max_abs_difference(mul(disc::s_star(g), disc::s(g)), one), 0.0);
    EXPECT_LE(max_abs_difference(mul(disc::s(g), disc::s_star(g)), one - disc::indicator(g, 0)), 0.0);
}

TEST_P(DiscRelations, MatricesAgreeWithMultiprecisionOracle) {
    const double qd = GetParam();
    const int K = 40;
    const DiscGrid g(qd, K);
    const oracle::Real q(qd);
    EXPECT_LE(oracle::max_diff(oracle::z(q, K), to_matrix(disc::z(g)), K), kTol);
    EXPECT_LE(oracle::max_diff(oracle::y(q, K), to_matrix(disc::y(g)), K), kTol);
    EXPECT_LE(oracle::max_diff(oracle::y(q, K, 0.5), to_matrix(disc::y_pow(g, 0.5)), K), kTol);
    EXPECT_LE(oracle::max_diff(oracle::s(K), to_matrix(disc::s(g)), K), 0.0);
}

TEST_P(DiscRelations, RandomProductsMatchDenseProducts) {
    const double qd = GetParam();
    const int K = 32, support = 12;
    const DiscGrid g(qd, K);
    std::mt19937_64 rng = job_rng(5, 0);
    for (int i = 0; i < 10; ++i) {
        const DiscElement f = random_f0(g, rng, 3, support);
        const DiscElement h = random_f0(g, rng, 3, support);
        const oracle::Matrix ref = oracle::from_eigen(to_matrix(f)) * oracle::from_eigen(to_matrix(h));
        EXPECT_LE(oracle::max_diff(ref, to_matrix(mul(f, h)), K - 4), kTol);
    }
}

INSTANTIATE_TEST_SUITE_P(Q, DiscRelations, ::testing::Values(0.3, 0.5, 0.9));

TEST(DiscElement, StarIsInvolutiveAndAntiMultiplicative) {
    const DiscGrid g(0.5, 24);
    std::mt19937_64 rng = job_rng(3, 1);
    const DiscElement f = random_f0(g, rng, 2, 10), h = random_f0(g, rng, 2, 10);
    EXPECT_LE(max_abs_difference(star(star(f)), f), 0.0);
    EXPECT_LE(max_abs_difference(star(mul(f, h)), mul(star(h), star(f))), kTol);
    EXPECT_LE((to_matrix(star(f)) - to_matrix(f).adjoint()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(DiscElement, SigmaScalesDegrees) {
    const DiscGrid g(0.5, 16);
    const DiscElement s = sigma(disc::s(g), 1.0);
    EXPECT_LE(max_abs_difference(s, 2.0 * disc::s(g)), kTol);
    const DiscElement z = sigma(disc::z(g), 2.0);
    EXPECT_LE(max_abs_difference(z, 0.25 * disc::z(g)), kTol);
    EXPECT_LE(max_abs_difference(sigma(disc::y(g), 1.0), disc::y(g)), 0.0);
}

TEST(DiscElement, SigmaIsAnAutomorphism) {
    const DiscGrid g(0.4, 24);
    std::mt19937_64 rng = job_rng(8, 0);
    const DiscElement f = random_f0(g, rng, 2, 10), h = random_f0(g, rng, 2, 10);
    const DiscElement lhs = sigma(mul(f, h), 1.0);
    const DiscElement rhs = mul(sigma(f, 1.0), sigma(h, 1.0));
    EXPECT_LE(max_abs_difference(lhs, rhs) / std::max(1.0, max_abs_value(lhs, 24)), kTol);
}

TEST(DiscElement, SymbolSendsZToTheCircleGenerator) {
    const DiscGrid g(0.5, 16);
    EXPECT_LE(max_abs_difference(symbol(disc::z(g)), CircleElement::mode(-1)), kTol);
    EXPECT_LE(max_abs_difference(symbol(disc::s(g)), CircleElement::mode(1)), 0.0);
    EXPECT_TRUE(symbol(disc::y(g)).is_zero());
    EXPECT_TRUE(symbol(disc::indicator(g, 3)).is_zero());
    EXPECT_LE(max_abs_difference(symbol(mul(disc::z_star(g), disc::z(g))), CircleElement::mode(0)), kTol);
}

TEST(DiscElement, SymbolIsMultiplicative) {
    const DiscGrid g(0.5, 16);
    const DiscElement x = disc::z(g) + 2.0 * disc::s(g), w = disc::z_star(g) + disc::y(g);
    EXPECT_LE(max_abs_difference(symbol(mul(x, w)), symbol(x) * symbol(w)), kTol);
}

TEST(DiscElement, SymbolOfUnboundedThrows) {
    const DiscGrid g(0.5, 16);
    EXPECT_THROW(symbol(disc::y_pow(g, -1.0)), UnboundedSymbolError);
}

TEST(DiscElement, GridMismatchRejected) {
    EXPECT_THROW(DiscGrid(1.0, 8), ParameterError);
    EXPECT_THROW(DiscGrid(0.5, 0), ParameterError);
}
