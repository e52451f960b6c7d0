#include <gtest/gtest.h>

#include "qdirac/errors.hpp"
#include "qdirac/operator_norm.hpp"
#include "qdirac/su2q.hpp"

using namespace qdirac;

namespace {

constexpr double kTol = 1e-12;

SU2Element rel(const SU2Element& a, const SU2Element& b) { return a - b; }

}  // namespace

TEST(SU2Element, DefiningRelationsInTheAlgebra) {
    const double q = 0.5;
    const DiscGrid g(q, 40);
    const SU2Element a = su2::a(g), c = su2::c(g), as = star(a), cs = star(c), one = su2::one(g);
    const SU2Element zero(g);
    EXPECT_LE(max_abs_difference(rel(mul(a, c), q * mul(c, a)), zero), kTol);
    EXPECT_LE(max_abs_difference(rel(mul(a, cs), q * mul(cs, a)), zero), kTol);
    EXPECT_LE(max_abs_difference(rel(mul(c, cs), mul(cs, c)), zero), kTol);
    EXPECT_LE(max_abs_difference(mul(as, a) + mul(cs, c), one), kTol);
    EXPECT_LE(max_abs_difference(mul(a, as) + (q * q) * mul(c, cs), one), kTol);
}

TEST(SU2Element, StarAndModes) {
    const DiscGrid g(0.5, 16);
    const SU2Element u = su2::u(g);
    EXPECT_LE(max_abs_difference(mul(u, star(u)), su2::one(g)), 0.0);
    const SU2Element c = su2::c(g);
    ASSERT_NE(c.part(1), nullptr);
    EXPECT_EQ(star(c).part(-1) != nullptr, true);
    EXPECT_LE(max_abs_difference(c.shifted(-1), SU2Element::from_disc(disc::y(g))), 0.0);
}

TEST(SU2Element, SigmaLeavesModesAlone) {
    const DiscGrid g(0.5, 16);
    const SU2Element c = su2::c(g);
    EXPECT_LE(max_abs_difference(sigma(c, 1.0), c), 0.0);
    EXPECT_LE(max_abs_difference(sigma(su2::a(g), 1.0), 0.5 * su2::a(g)), kTol);
}

TEST(RhoTilde, IdentityAndStarRepresentation) {
    const TruncatedSpace space(0.5, 2.0, 10, 3);
    const OperatorAlgebra alg(space);
    const SparseOp id = rho_tilde(su2::one(space.grid()), alg);
    EXPECT_EQ(SparseOp(id - alg.identity()).norm(), 0.0);

    // The adjoint with respect to the weighted inner product is W^{-1} A^H W, and left
    // multiplication does not see the right weights.
    const SparseOp rc = rho_tilde(su2::c(space.grid()), alg);
    const SparseOp rcs = rho_tilde(star(su2::c(space.grid())), alg);
    const SparseOp oc = to_orthonormal(space, rc), ocs = to_orthonormal(space, rcs);
    const SparseOp diff = SparseOp(oc.adjoint()) - ocs;
    double worst = 0.0;
    for (int col = 0; col < diff.outerSize(); ++col) {
        if (!space.interior(col, 2, 1)) continue;
        for (SparseOp::InnerIterator it(diff, col); it; ++it)
            if (space.interior(it.row(), 2, 1)) worst = std::max(worst, std::abs(it.value()));
    }
    EXPECT_LE(worst, kTol);
}

TEST(RhoTilde, GeneratorsAreContractions) {
    const TruncatedSpace space(0.5, 2.0, 12, 3);
    const OperatorAlgebra alg(space);
    const SparseOp ra = to_orthonormal(space, rho_tilde(su2::a(space.grid()), alg));
    const SparseOp rc = to_orthonormal(space, rho_tilde(su2::c(space.grid()), alg));
    EXPECT_LE(operator_norm(ra).value, 1.0 + 1e-9);
    EXPECT_LE(operator_norm(rc).value, 1.0 + 1e-9);
}

TEST(RhoTilde, GeneratorsLowerTheGradeByOne) {
    const TruncatedSpace space(0.5, 2.0, 10, 3);
    const OperatorAlgebra alg(space);
    for (const SU2Element& x : {su2::a(space.grid()), su2::c(space.grid())}) {
        const SparseOp r = rho_tilde(x, alg);
        int entries = 0;
        for (int col = 0; col < r.outerSize(); ++col)
            for (SparseOp::InnerIterator it(r, col); it; ++it) {
                EXPECT_EQ(space.grade(it.row()), space.grade(col) - 1);
                ++entries;
            }
        EXPECT_GT(entries, 0);
    }
}

TEST(RhoTilde, UnboundedElementThrows) {
    const TruncatedSpace space(0.5, 2.0, 10, 2);
    const OperatorAlgebra alg(space);
    EXPECT_THROW(rho_tilde(SU2Element::from_disc(disc::y_pow(space.grid(), -1.0)), alg), DomainError);
}

TEST(FieldSpace, IndexingRoundTrip) {
    const TruncatedSpace space(0.5, 1.0, 5, 2);
    EXPECT_EQ(space.dimension(), 5L * 5L * 5L);
    for (long i = 0; i < space.dimension(); ++i) {
        const auto s = space.site(i);
        EXPECT_EQ(space.index(s.m, s.j, s.k), i);
        EXPECT_EQ(space.grade(i), (s.j - s.k) - s.m);
    }
}

TEST(FieldSpace, CompressAfterPaddingKeepsInteriorEntries) {
    const TruncatedSpace inner(0.5, 2.0, 8, 2);
    const TruncatedSpace outer = inner.padded(4, 2);
    const OperatorAlgebra big(outer), small(inner);
    const SparseOp a = compress(big.left(disc::z(outer.grid())), outer, inner);
    const SparseOp b = small.left(disc::z(inner.grid()));
    EXPECT_EQ(SparseOp(a - b).norm(), 0.0);
}
