#include <gtest/gtest.h>

#include "commands.hpp"
#include "expr.hpp"
#include "run_config.hpp"
#include "suites.hpp"

using namespace qdirac;
using namespace qdirac::cli;

TEST(Expr, PrintParseRoundTrip) {
    for (const char* text : {"a", "a* * c - 0.5 * c * a*", "z*z + y^2", "(a + c)* * 2i", "-u * uinv + ind(3)",
                             "s* s - one", "(a*)*", "i * a + 1.5e-3"}) {
        const Expr e = parse(text);
        EXPECT_EQ(parse(print(e)), e) << text;
        EXPECT_EQ(print(parse(print(e))), print(e)) << text;
    }
}

TEST(Expr, JuxtapositionAndStar) {
    EXPECT_EQ(parse("z*z"), parse("z* * z"));
    EXPECT_EQ(parse("a c"), parse("a * c"));
    EXPECT_EQ(parse("2a"), parse("2 * a"));
    const Expr e = parse("a* * c - 0.5 * c * a*");
    ASSERT_EQ(e.kind, Expr::Kind::sub);
    EXPECT_EQ(e.args[0]->kind, Expr::Kind::mul);
    EXPECT_EQ(e.args[1]->kind, Expr::Kind::mul);
}

TEST(Expr, ErrorsReportOffsets) {
    try {
        parse("(");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 1u);
        EXPECT_FALSE(e.expected().empty());
    }
    EXPECT_THROW(parse("a +"), ParseError);
    EXPECT_THROW(parse("b"), ParseError);
    EXPECT_THROW(parse("a ^ x"), ParseError);
    EXPECT_THROW(parse("a)"), ParseError);
}

TEST(Expr, CompiledValues) {
    const DiscGrid g(0.5, 24);
    const SU2Element one = compile(parse("z*z + y^2"))(g);
    EXPECT_LE(max_abs_difference(one, su2::one(g)), 1e-12);
    const SU2Element w = compile(parse("a* c - 0.5 c a*"))(g);
    const SU2Element ref = mul(star(su2::a(g)), su2::c(g)) - 0.5 * mul(su2::c(g), star(su2::a(g)));
    EXPECT_LE(max_abs_difference(w, ref), 1e-15);
    const SU2Element u = compile(parse("u uinv"))(g);
    EXPECT_LE(max_abs_difference(u, su2::one(g)), 0.0);
}

TEST(Expr, FormatDoubleRoundTrips) {
    for (double v : {0.1, 1e-300, 123456.789, -2.5, 1.0 / 3.0}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(RunConfig, JsonMergeIsStrict) {
    RunConfig c;
    merge_json_text(R"({"q": 0.3, "twist": 2, "K": 12, "sweep": [8, 12]})", c);
    EXPECT_EQ(c.q, 0.3);
    EXPECT_EQ(c.twist, 2);
    EXPECT_EQ(c.K, 12);
    EXPECT_EQ(c.sweep, (std::vector<int>{8, 12}));
    EXPECT_THROW(merge_json_text(R"({"qq": 0.3})", c), ConfigError);
    EXPECT_THROW(merge_json_text(R"({"K": "many"})", c), ConfigError);
    EXPECT_THROW(merge_json_text("[1, 2]", c), ConfigError);
    EXPECT_THROW(merge_json_text("{", c), ConfigError);
}

TEST(RunConfig, SweepParsing) {
    EXPECT_EQ(parse_sweep("16,32,64"), (std::vector<int>{16, 32, 64}));
    EXPECT_THROW(parse_sweep("16,,32"), ConfigError);
    EXPECT_THROW(parse_sweep("x"), ConfigError);
}

TEST(Commands, ExitCodes) {
    RunConfig c;
    c.suite = "algebra";
    EXPECT_EQ(run_command("verify", c).exit_code, kPass);

    RunConfig bad_alpha;
    bad_alpha.alpha = 1.0;
    bad_alpha.suite = "dirac";
    EXPECT_EQ(run_command("verify", bad_alpha).exit_code, kConfigError);

    RunConfig bad_phi;
    bad_phi.phi = "(";
    const CommandResult r = run_command("commutator", bad_phi);
    EXPECT_EQ(r.exit_code, kConfigError);
    EXPECT_NE(r.diagnostics.find("offset 1"), std::string::npos) << r.diagnostics;

    RunConfig cap;
    cap.dimension_cap = 50;
    EXPECT_EQ(run_command("spectrum", cap).exit_code, kSizeCap);

    RunConfig domain;
    domain.twist = 2;
    domain.phi = "c";
    domain.sweep = {8};
    domain.M = 2;
    EXPECT_EQ(run_command("commutator", domain).exit_code, kDomainError);

    RunConfig unbounded;
    unbounded.phi = "yinv";
    EXPECT_EQ(run_command("symbol", unbounded).exit_code, kDomainError);

    EXPECT_EQ(run_command("frobnicate", RunConfig{}).exit_code, kConfigError);
}

TEST(Commands, ReportsAreReproducible) {
    RunConfig c;
    c.K = 8;
    c.M = 2;
    c.sweep = {8, 10};
    c.phi = "a* c";
    const CommandResult a = run_command("commutator", c);
    const CommandResult b = run_command("commutator", c);
    EXPECT_EQ(a.exit_code, kPass);
    EXPECT_EQ(a.report, b.report);

    c.format = "csv";
    c.delta_step = 2;
    const CommandResult s1 = run_command("spectrum", c);
    const CommandResult s2 = run_command("spectrum", c);
    EXPECT_EQ(s1.report, s2.report);
    EXPECT_EQ(s1.report.rfind("grade,index,eigenvalue,delta_K\n", 0), 0u);
}

TEST(Commands, SymbolOfZStarZPlusYSquared) {
    RunConfig c;
    c.phi = "z*z + y^2";
    c.format = "csv";
    const CommandResult r = run_command("symbol", c);
    EXPECT_EQ(r.exit_code, kPass);
    EXPECT_EQ(r.report, "circle_mode,symbol_mode,re,im\n0,0,1,0\n");
}

TEST(Suites, RandomWordsUseTwistAtoms) {
    for (const std::string& w : random_words(2, 20, 5)) EXPECT_EQ(w.find('c'), std::string::npos) << w;
    EXPECT_EQ(random_words(1, 20, 5), random_words(1, 20, 5));
    EXPECT_EQ(random_words(1, 20, 5).size(), 20u);
}
