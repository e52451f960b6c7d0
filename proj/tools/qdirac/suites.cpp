#include "suites.hpp"

#include <algorithm>
#include <cmath>

#include "expr.hpp"
#include "qdirac/calculus.hpp"
#include "qdirac/l2_space.hpp"
#include "qdirac/parallel.hpp"
#include "qdirac/random.hpp"

namespace qdirac::cli {

Check make_check(std::string name, double residual, double threshold) {
    return {std::move(name), residual, threshold, std::isfinite(residual) && residual <= threshold};
}

namespace {

SU2Builder starred(SU2Builder b) {
    return [b](const DiscGrid& grid) { return star(b(grid)); };
}

double su2_difference(const SU2Element& a, const SU2Element& b) { return max_abs_difference(a, b); }

}  // namespace

double relation_residual(const std::vector<RelationTerm>& terms, const TruncatedSpace& space, int margin) {
    std::size_t longest = 1;
    for (const auto& t : terms) longest = std::max(longest, t.factors.size());
    const int pad = static_cast<int>(longest) + 2;
    const TruncatedSpace outer = space.padded(pad, pad);
    const OperatorAlgebra algebra(outer);
    const long n = outer.dimension();
    SparseOp total(n, n);
    for (const auto& t : terms) {
        SparseOp prod = algebra.identity();
        for (const auto& f : t.factors) prod = SparseOp(prod * rho_tilde(f(outer.grid()), algebra));
        total += t.coefficient * prod;
    }
    const SparseOp r = compress(total, outer, space);
    double worst = 0.0;
    for (int c = 0; c < r.outerSize(); ++c) {
        if (!space.interior(c, margin, 1)) continue;
        for (SparseOp::InnerIterator it(r, c); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

std::vector<Check> algebra_suite(const RunConfig& config) {
    const double q = config.q;
    const DiscGrid grid(q, config.K);
    const DiscElement z = disc::z(grid);
    const DiscElement zs = disc::z_star(grid);
    const DiscElement y = disc::y(grid);
    const DiscElement s = disc::s(grid);
    const DiscElement ss = disc::s_star(grid);
    const DiscElement one = disc::one(grid);
    std::vector<Check> out;
    const double tol = kAlgebraTolerance;

    const DiscElement qdr = mul(z, zs) - (q * q) * mul(zs, z);
    out.push_back(make_check("disc_zzs_minus_q2_zsz", max_abs_difference(qdr, (1.0 - q * q) * one), tol));
    out.push_back(make_check("disc_zy_eq_q_yz", max_abs_difference(mul(z, y), q * mul(y, z)), tol));
    out.push_back(make_check("disc_zsz_eq_1_minus_y2", max_abs_difference(mul(zs, z), one - mul(y, y)), tol));
    out.push_back(make_check("disc_s_isometry", max_abs_difference(mul(ss, s), one), tol));
    out.push_back(
        make_check("disc_ssstar_projection", max_abs_difference(mul(s, ss), one - disc::indicator(grid, 0)), tol));
    const DiscElement mixed = z + mul(y, s);
    out.push_back(make_check("disc_star_involution", max_abs_difference(star(star(mixed)), mixed), tol));
    {
        const int n = config.K;
        const Eigen::MatrixXcd dense = to_matrix(z) * to_matrix(zs);
        const Eigen::MatrixXcd prod = to_matrix(mul(z, zs));
        const int m = n - 1;
        out.push_back(make_check("disc_product_matches_matrices",
                                 (dense - prod).topLeftCorner(m, m).cwiseAbs().maxCoeff(), tol));
    }
    {
        const CircleElement sym = symbol(mul(z, zs));
        out.push_back(make_check("symbol_multiplicative",
                                 max_abs_difference(sym, symbol(z) * symbol(zs)) +
                                     max_abs_difference(sym, CircleElement::mode(0)),
                                 tol));
        out.push_back(make_check("symbol_z_is_mode_minus_1",
                                 max_abs_difference(symbol(z), CircleElement::mode(-1)), tol));
    }

    const SU2Element a = su2::a(grid);
    const SU2Element c = su2::c(grid);
    const SU2Element as = star(a);
    const SU2Element cs = star(c);
    const SU2Element e1 = su2::one(grid);
    out.push_back(make_check("su2_ac_eq_q_ca", su2_difference(mul(a, c), q * mul(c, a)), tol));
    out.push_back(make_check("su2_acs_eq_q_csa", su2_difference(mul(a, cs), q * mul(cs, a)), tol));
    out.push_back(make_check("su2_c_normal", su2_difference(mul(c, cs), mul(cs, c)), tol));
    out.push_back(make_check("su2_asa_plus_csc", su2_difference(mul(as, a) + mul(cs, c), e1), tol));
    out.push_back(make_check("su2_aas_plus_q2_ccs", su2_difference(mul(a, as) + (q * q) * mul(c, cs), e1), tol));

    const TruncatedSpace space(q, config.dirac().alpha_value(), config.K, config.M);
    const SU2Builder ba = su2::a;
    const SU2Builder bc = su2::c;
    const SU2Builder bas = starred(su2::a);
    const SU2Builder bcs = starred(su2::c);
    const std::vector<std::pair<std::string, std::vector<RelationTerm>>> relations = {
        {"rho_ac_eq_q_ca", {{1.0, {ba, bc}}, {-q, {bc, ba}}}},
        {"rho_acs_eq_q_csa", {{1.0, {ba, bcs}}, {-q, {bcs, ba}}}},
        {"rho_c_normal", {{1.0, {bc, bcs}}, {-1.0, {bcs, bc}}}},
        {"rho_asa_plus_csc", {{1.0, {bas, ba}}, {1.0, {bcs, bc}}, {-1.0, {su2::one}}}},
        {"rho_aas_plus_q2_ccs", {{1.0, {ba, bas}}, {q * q, {bc, bcs}}, {-1.0, {su2::one}}}},
    };
    for (const auto& [name, terms] : relations)
        out.push_back(make_check(name, relation_residual(terms, space, config.margin), tol));

    {
        const TruncatedSpace outer = space.padded(2, 2);
        const OperatorAlgebra alg(outer);
        Residual worst;
        std::mt19937_64 rng = job_rng(config.seed, 7);
        for (const SU2Builder& x : {ba, bc}) {
            const SparseOp rx = compress(rho_tilde(x(outer.grid()), alg), outer, space);
            const SparseOp rxs = compress(rho_tilde(star(x(outer.grid())), alg), outer, space);
            for (int p = 0; p < 10; ++p) {
                const Eigen::VectorXcd f = random_interior_vector(space, 1, config.margin, 1, rng);
                const Eigen::VectorXcd g = random_interior_vector(space, 1, config.margin, 1, rng);
                const Eigen::VectorXcd xf = rx * f;
                const Eigen::VectorXcd xsg = rxs * g;
                const double scale = std::sqrt(std::abs(inner(space, xf, xf) * inner(space, g, g))) +
                                     std::sqrt(std::abs(inner(space, f, f) * inner(space, xsg, xsg)));
                worst = combine(worst, {std::abs(inner(space, xf, g) - inner(space, f, xsg)), scale});
            }
        }
        out.push_back(make_check("rho_star_representation", worst.relative(), tol));
    }

    for (double alpha : {1.0, 2.0}) {
        const IntegralResult r = integrate(one, alpha);
        const double exact = (1.0 - q) / (1.0 - std::pow(q, alpha));
        const double excess = std::max(0.0, std::abs(r.value - exact) - r.tail_bound);
        out.push_back(make_check("integral_one_alpha_" + format_double(alpha), excess, tol));
    }
    return out;
}

std::vector<Check> calculus_suite(const RunConfig& config) {
    const double q = config.q;
    const DiscGrid grid(q, config.K);
    const DiscElement z = disc::z(grid);
    const DiscElement zs = disc::z_star(grid);
    const DiscElement y = disc::y(grid);
    const double tol = kAlgebraTolerance;
    std::vector<Check> out;

    out.push_back(make_check("T1_z_eq_y", max_abs_difference(apply(Derivation::T1, z), y), tol));
    out.push_back(make_check("T2_zs_eq_y", max_abs_difference(apply(Derivation::T2, zs), y), tol));
    out.push_back(make_check("T1_y_eq_minus_zs_over_q1q",
                             max_abs_difference(apply(Derivation::T1, y), (-1.0 / (q * (1.0 + q))) * zs), tol));
    out.push_back(make_check("dz_z2_eq_1pq2_z",
                             max_abs_difference(apply(Derivation::d_z, mul(z, z)), (1.0 + q * q) * z), tol));
    out.push_back(make_check("dz_z_eq_1", max_abs_difference(apply(Derivation::d_z, z), disc::one(grid)), tol));
    out.push_back(make_check("dzbar_zs_eq_1", max_abs_difference(apply(Derivation::d_zbar, zs), disc::one(grid)), tol));

    const int support = std::max(1, (config.K - config.margin) / 2);
    const int n = config.leibniz_pairs;
    struct Job {
        std::string name;
        int derivation;  // index into Derivation, or -1/-2 for T0/S0
    };
    const std::vector<Job> jobs = {{"leibniz_T1_sigma1", 0}, {"leibniz_T2_sigma1", 1}, {"leibniz_T0_sigma1", -1},
                                   {"leibniz_dz_sigma2", 2},  {"leibniz_dzbar_sigma2", 3}, {"leibniz_S0_sigma2", -2}};
    const Derivation kinds[] = {Derivation::T1, Derivation::T2, Derivation::d_z, Derivation::d_zbar};
    std::vector<Residual> results(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t j) {
        std::mt19937_64 rng = job_rng(config.seed, 100 + j);
        Residual worst;
        for (int p = 0; p < n; ++p) {
            if (jobs[j].derivation >= 0) {
                const DiscElement f = random_f0(grid, rng, 2, support);
                const DiscElement g = random_f0(grid, rng, 2, support);
                worst = combine(worst, leibniz_residual(kinds[jobs[j].derivation], f, g, config.margin));
            } else {
                const SU2Element f = random_su2_f0(grid, rng, 1, support, 1);
                const SU2Element g = random_su2_f0(grid, rng, 1, support, 1);
                worst = combine(worst, t0_leibniz_residual(-jobs[j].derivation, f, g, config.margin));
            }
        }
        results[j] = worst;
    });
    for (std::size_t j = 0; j < jobs.size(); ++j) out.push_back(make_check(jobs[j].name, results[j].relative(), tol));

    // [x T, f]_sigma psi = x (T f) psi for each term of H, E, F.
    const DiracConfig dc = config.dirac();
    const OperatorTable table = operator_table(dc);
    const TruncatedSpace space = dc.space();
    std::vector<OperatorTerm> terms;
    for (const auto* list : {&table.H, &table.E, &table.F}) terms.insert(terms.end(), list->begin(), list->end());
    std::vector<Residual> per_term(terms.size());
    parallel_for(terms.size(), [&](std::size_t t) {
        const std::uint64_t job = 200 + t;
        const std::uint64_t seed = config.seed;
        const int sup = std::max(1, (config.K - config.margin) / 2);
        const SU2Builder f = [seed, job, sup](const DiscGrid& g) {
            std::mt19937_64 r = job_rng(seed, job);
            return random_su2_f0(g, r, 1, sup, 1);
        };
        std::mt19937_64 rng = job_rng(config.seed, 300 + t);
        Residual worst;
        for (int p = 0; p < 5; ++p) {
            const Eigen::VectorXcd psi = random_interior_vector(space, 1, config.margin, 1, rng);
            worst = combine(worst, term_commutator(terms[t], f, psi, space, kIndexPad, kModePad).residual);
        }
        per_term[t] = worst;
    });
    Residual terms_worst;
    for (const auto& r : per_term) terms_worst = combine(terms_worst, r);
    out.push_back(make_check("term_commutators_closed_form", terms_worst.relative(), kOperatorTolerance));
    return out;
}

std::vector<Check> adjoints_suite(const RunConfig& config) {
    AdjointOptions options;
    options.pairs = config.pairs;
    options.seed = config.seed;
    options.margin = config.margin;
    std::vector<Check> out;
    for (const auto& a : adjoint_residuals(config.dirac(), options))
        out.push_back(make_check(a.name, a.residual.relative(), kOperatorTolerance));
    return out;
}

std::vector<std::string> random_words(int twist, int count, std::uint64_t seed) {
    const std::vector<std::string> atoms =
        twist == 1 ? std::vector<std::string>{"a", "c", "a*", "c*"} : std::vector<std::string>{"a", "a*", "u", "uinv"};
    std::mt19937_64 rng = job_rng(seed, 500);
    std::uniform_int_distribution<int> length(1, 3);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(atoms.size()) - 1);
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        std::string w;
        const int l = length(rng);
        for (int k = 0; k < l; ++k) w += (k ? " " : "") + atoms[static_cast<std::size_t>(pick(rng))];
        out.push_back(w);
    }
    return out;
}

std::vector<Check> dirac_suite(const RunConfig& config) {
    const DiracConfig dc = config.dirac();
    std::vector<Check> out;
    const DiracMatrix d = assemble_dirac(dc);
    out.push_back(make_check("grade_conservation", cross_grade_max(d), 0.0));

    AdjointOptions options;
    options.pairs = config.pairs;
    options.seed = config.seed;
    options.margin = config.margin;
    const AdjointCheck sym = symmetry_residual(dc, options);
    out.push_back(make_check(sym.name, sym.residual.relative(), kOperatorTolerance));

    std::vector<std::string> phis = dc.twist == 1 ? std::vector<std::string>{"a", "c", "a*", "c*"}
                                                  : std::vector<std::string>{"a", "a*", "u", "uinv"};
    for (const auto& w : random_words(dc.twist, config.random_words, config.seed)) phis.push_back(w);
    phis.push_back("one");
    std::vector<Residual> oracle(phis.size());
    parallel_for(phis.size(), [&](std::size_t i) {
        const SU2Builder phi = compile(parse(phis[i]));
        oracle[i] = twisted_commutator(dc, phi, 3, config.margin).residual;
    });
    Residual worst;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        if (phis[i] == "one") {
            out.push_back(make_check("commutator_of_one_vanishes", oracle[i].absolute, kOperatorTolerance));
        } else if (i < 4) {
            out.push_back(make_check("commutator_oracle_" + phis[i], oracle[i].relative(), kOperatorTolerance));
        } else {
            worst = combine(worst, oracle[i]);
        }
    }
    if (config.random_words > 0)
        out.push_back(make_check("commutator_oracle_random_words", worst.relative(), kOperatorTolerance));

    if (dc.twist == 1) {
        const double q = dc.q;
        const DiscGrid grid(q, dc.K);
        const SU2Element a = su2::a(grid);
        const SU2Element c = su2::c(grid);
        const HEFElements ha = apply_hef_collapsed(a, dc);
        const HEFElements hc = apply_hef_collapsed(c, dc);
        out.push_back(make_check("collapsed_H_a_eq_z_over_q", max_abs_difference(ha.H, (1.0 / q) * a),
                                 kAlgebraTolerance));
        out.push_back(make_check("collapsed_E_a_eq_0", max_abs_difference(ha.E, SU2Element(grid)), kAlgebraTolerance));
        out.push_back(make_check("collapsed_F_a_eq_q_c", max_abs_difference(ha.F, q * c), kAlgebraTolerance));
        out.push_back(make_check("collapsed_E_c_eq_z_over_q", max_abs_difference(hc.E, (1.0 / q) * a),
                                 kAlgebraTolerance));
    }
    return out;
}

std::vector<Check> run_suite(const std::string& suite, const RunConfig& config) {
    if (suite == "algebra") return algebra_suite(config);
    if (suite == "calculus") return calculus_suite(config);
    if (suite == "adjoints") return adjoints_suite(config);
    if (suite == "dirac") return dirac_suite(config);
    std::vector<Check> out;
    for (const char* s : {"algebra", "calculus", "adjoints", "dirac"}) {
        auto part = run_suite(s, config);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace qdirac::cli
