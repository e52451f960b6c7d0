#include <gtest/gtest.h>

#include "qdirac/grid_function.hpp"

using namespace qdirac;

TEST(GridFunction, ConstantHasLimitAndZeroOffsets) {
    const GridFunction f = GridFunction::constant(5, 2.5);
    ASSERT_TRUE(f.has_limit());
    EXPECT_EQ(f.limit(), cplx(2.5));
    for (int k = 0; k < 5; ++k) EXPECT_EQ(f.offset(k), cplx(0.0));
    EXPECT_TRUE(f.settled());
}

TEST(GridFunction, SamplePastGridUsesLimit) {
    const GridFunction f = GridFunction::with_limit(1.0, {0.5, 0.25, 0.125});
    bool approximate = false;
    EXPECT_EQ(f.sample(1, approximate).value(), cplx(1.25));
    EXPECT_FALSE(approximate);
    EXPECT_EQ(f.sample(7, approximate).value(), cplx(1.0));
    EXPECT_TRUE(approximate);
}

TEST(GridFunction, SettledTableReadsPastGridExactly) {
    const GridFunction f = GridFunction::with_limit(3.0, {1.0, 0.0});
    bool approximate = false;
    EXPECT_EQ(f.sample(10, approximate).value(), cplx(3.0));
    EXPECT_FALSE(approximate);
}

TEST(GridFunction, UnboundedHasNoLimit) {
    const GridFunction f = GridFunction::unbounded({1.0, 2.0, 4.0});
    EXPECT_FALSE(f.has_limit());
    EXPECT_EQ(f.value(2), cplx(4.0));
    EXPECT_THROW((void)f.limit(), std::bad_optional_access);
}

TEST(GridFunction, MultiplyKeepsOffsetSplit) {
    const GridFunction::Sample a{true, 1.0, 1e-20};
    const GridFunction::Sample b{true, 1.0, 2e-20};
    const GridFunction::Sample p = multiply(a, b);
    EXPECT_EQ(p.limit, cplx(1.0));
    EXPECT_NEAR(p.offset.real(), 3e-20, 1e-34);
}

TEST(GridFunction, ConjugateAndScale) {
    GridFunction f = GridFunction::with_limit(cplx(0, 1), {cplx(1, 1)});
    const GridFunction g = f.conj();
    EXPECT_EQ(g.limit(), cplx(0, -1));
    EXPECT_EQ(g.offset(0), cplx(1, -1));
    f *= 2.0;
    EXPECT_EQ(f.value(0), cplx(2, 4));
}
