// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qdirac/calculus.hpp"
#include "qdirac/dirac.hpp"
#include "qdirac/l2_space.hpp"
#include "qdirac/random.hpp"
#include "qdirac/spectrum.hpp"

using namespace qdirac;

namespace {

// Pinned tolerances.
constexpr double kAlgebraTol = 1e-12;
constexpr double kOperatorTol = 1e-10;
constexpr double kDiscSeconds = 1.0;
constexpr double kLeibnizSeconds = 10.0;

struct Outcome {
    bool pass = true;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string note;

    void require(double r, double tol) {
        residual = std::max(residual, r);
        tolerance = tol;
        if (!(std::isfinite(r) && r <= tol)) pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SU2Builder starred(SU2Builder b) {
    return [b](const DiscGrid& g) { return star(b(g)); };
}

SU2Builder product(std::vector<SU2Builder> factors) {
    return [factors](const DiscGrid& g) {
        SU2Element out = su2::one(g);
        for (const auto& f : factors) out = mul(out, f(g));
        return out;
    };
}

// ---------------------------------------------------------------------------

Outcome disc_relations() {
    Outcome o;
    const int K = 64;
    double library_seconds = 0.0;
    for (double qd : {0.3, 0.5, 0.9}) {
        const auto t0 = std::chrono::steady_clock::now();
        const DiscGrid grid(qd, K);
        const DiscElement z = disc::z(grid), zs = disc::z_star(grid), y = disc::y(grid);
        const DiscElement s = disc::s(grid), ss = disc::s_star(grid), one = disc::one(grid);
        const DiscElement zzs = mul(z, zs), zsz = mul(zs, z), zy = mul(z, y), yz = mul(y, z);
        const DiscElement sss = mul(ss, s), sss2 = mul(s, ss);
        o.require(max_abs_difference(zzs - (qd * qd) * zsz, (1.0 - qd * qd) * one), kAlgebraTol);
        o.require(max_abs_difference(zy, qd * yz), kAlgebraTol);
        o.require(max_abs_difference(sss, one), kAlgebraTol);
        o.require(max_abs_difference(sss2, one - disc::indicator(grid, 0)), kAlgebraTol);
        library_seconds += seconds_since(t0);

        // Library products against 50-digit dense products of the generator matrices.
        const oracle::Real q(qd);
        const oracle::Matrix Z = oracle::z(q, K), Zs = oracle::z_star(q, K), Y = oracle::y(q, K);
        const oracle::Matrix S = oracle::s(K);
        o.require(oracle::max_diff(Z * Zs, to_matrix(zzs), K - 1), kAlgebraTol);
        o.require(oracle::max_diff(Zs * Z, to_matrix(zsz), K - 1), kAlgebraTol);
        o.require(oracle::max_diff(Z * Y, to_matrix(zy), K - 1), kAlgebraTol);
        o.require(oracle::max_diff(S.adjoint() * S, to_matrix(sss), K - 1), kAlgebraTol);
        o.require(oracle::max_diff(S * S.adjoint(), to_matrix(sss2), K - 1), kAlgebraTol);
    }
    if (library_seconds >= kDiscSeconds) o.pass = false;
    o.note = "q in {0.3, 0.5, 0.9}, K = 64, library time " + std::to_string(library_seconds) + " s (limit 1 s)";
    return o;
}

// sum_t coeff_t rho(x_t1) ... rho(x_tn), built padded, compressed, max over interior columns.
double relation_residual(const std::vector<std::pair<cplx, std::vector<SU2Builder>>>& terms, const TruncatedSpace& space,
                         int margin) {
    const TruncatedSpace outer = space.padded(4, 4);
    const OperatorAlgebra alg(outer);
    const long n = outer.dimension();
    SparseOp total(n, n);
    for (const auto& [coeff, factors] : terms) {
        SparseOp p = alg.identity();
        for (const auto& f : factors) p = SparseOp(p * rho_tilde(f(outer.grid()), alg));
        total += coeff * p;
    }
    const SparseOp r = compress(total, outer, space);
    double worst = 0.0;
    for (int c = 0; c < r.outerSize(); ++c) {
        if (!space.interior(c, margin, 1)) continue;
        for (SparseOp::InnerIterator it(r, c); it; ++it) worst = std::max(worst, std::abs(it.value()));
    }
    return worst;
}

Outcome su2_relations() {
    Outcome o;
    const double q = 0.5;
    const int K = 32, M = 8, margin = 4;
    const TruncatedSpace space(q, 2.0, K, M);
    const SU2Builder a = su2::a, c = su2::c, as = starred(su2::a), cs = starred(su2::c), one = su2::one;
    o.require(relation_residual({{1.0, {a, c}}, {-q, {c, a}}}, space, margin), kAlgebraTol);
    o.require(relation_residual({{1.0, {a, cs}}, {-q, {cs, a}}}, space, margin), kAlgebraTol);
    o.require(relation_residual({{1.0, {c, cs}}, {-1.0, {cs, c}}}, space, margin), kAlgebraTol);
    o.require(relation_residual({{1.0, {as, a}}, {1.0, {cs, c}}, {-1.0, {one}}}, space, margin), kAlgebraTol);
    o.require(relation_residual({{1.0, {a, as}}, {q * q, {c, cs}}, {-1.0, {one}}}, space, margin), kAlgebraTol);

    // rho(a) and rho(c) entries against the closed-form action on E_jk (x) e^{imt}.
    const OperatorAlgebra alg(space);
    const SparseOp ra = rho_tilde(su2::a(space.grid()), alg);
    const SparseOp rc = rho_tilde(su2::c(space.grid()), alg);
    double worst = 0.0;
    for (long col = 0; col < space.dimension(); ++col) {
        const auto st = space.site(col);
        Eigen::VectorXcd expect_a = Eigen::VectorXcd::Zero(space.dimension());
        Eigen::VectorXcd expect_c = Eigen::VectorXcd::Zero(space.dimension());
        if (st.j >= 1) expect_a[space.index(st.m, st.j - 1, st.k)] = std::sqrt(1.0 - std::pow(q, 2.0 * st.j));
        if (st.m + 1 <= M) expect_c[space.index(st.m + 1, st.j, st.k)] = std::pow(q, st.j);
        worst = std::max(worst, (Eigen::VectorXcd(ra.col(col)) - expect_a).cwiseAbs().maxCoeff());
        worst = std::max(worst, (Eigen::VectorXcd(rc.col(col)) - expect_c).cwiseAbs().maxCoeff());
    }
    o.require(worst, kAlgebraTol);
    o.note = "five relations, K = 32, M = 8, margin 4; rho(a), rho(c) entries vs closed form";
    return o;
}

Outcome twisted_leibniz() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const double qd = 0.5;
    const int K = 32, margin = 4, support = 14, pairs = 200;
    const DiscGrid grid(qd, K);
    const oracle::Real q(qd);
    const Derivation kinds[] = {Derivation::T1, Derivation::T2, Derivation::d_z, Derivation::d_zbar};
    for (int d = 0; d < 4; ++d) {
        std::mt19937_64 rng = job_rng(2024, static_cast<std::uint64_t>(d));
        for (int p = 0; p < pairs; ++p) {
            const DiscElement f = random_f0(grid, rng, 2, support);
            const DiscElement g = random_f0(grid, rng, 2, support);
            o.require(leibniz_residual(kinds[d], f, g, margin).relative(), kAlgebraTol);
            if (p % 20 == 0) {
                // Independent evaluation of D(f) from 50-digit dense commutators.
                const bool in_z = kinds[d] == Derivation::T1 || kinds[d] == Derivation::d_z;
                const int pw = twist_of(kinds[d]) == 1 ? 1 : 2;
                const oracle::Matrix ref = oracle::derivation(q, oracle::from_eigen(to_matrix(f)), in_z, pw);
                const Eigen::MatrixXcd got = to_matrix(apply(kinds[d], f));
                o.require(oracle::max_diff(ref, got, K - margin) / std::max(1.0, oracle::max_abs(ref, K - margin)),
                          kAlgebraTol);
            }
        }
    }
    for (int kind : {1, 2}) {
        std::mt19937_64 rng = job_rng(2024, 10 + static_cast<std::uint64_t>(kind));
        for (int p = 0; p < pairs; ++p) {
            const SU2Element f = random_su2_f0(grid, rng, 1, support, 1);
            const SU2Element g = random_su2_f0(grid, rng, 1, support, 1);
            o.require(t0_leibniz_residual(kind, f, g, margin).relative(), kAlgebraTol);
        }
    }
    const double t = seconds_since(t0);
    if (t >= kLeibnizSeconds) o.pass = false;
    o.note = "200 pairs each for T1, T2, T0 (sigma^1) and d_z, d_zbar, S0 (sigma^2), " + std::to_string(t) +
             " s (limit 10 s)";
    return o;
}

Outcome adjoint_identities() {
    Outcome o;
    AdjointOptions opt;
    opt.pairs = 100;
    opt.seed = 7;
    int count = 0;
    for (int twist : {1, 2}) {
        DiracConfig c;
        c.twist = twist;
        c.K = 24;
        c.M = 6;
        for (const auto& a : adjoint_residuals(c, opt)) {
            o.require(a.residual.relative(), kOperatorTol);
            ++count;
        }
    }
    o.note = std::to_string(count) + " identities at the matching alpha, 100 interior pairs each, K = 24, M = 6";
    return o;
}

Outcome dirac_symmetry() {
    Outcome o;
    AdjointOptions opt;
    opt.pairs = 100;
    opt.seed = 11;
    for (int twist : {1, 2}) {
        DiracConfig c;
        c.twist = twist;
        c.K = 24;
        c.M = 6;
        o.require(symmetry_residual(c, opt).residual.relative(), kOperatorTol);
    }
    o.note = "D (alpha 2) and D_1 (alpha 1), K = 24, M = 6";
    return o;
}

Outcome commutator_oracle() {
    Outcome o;
    std::vector<SU2Builder> phis = {su2::a, su2::c, starred(su2::a), starred(su2::c)};
    const std::vector<SU2Builder> atoms = phis;
    std::mt19937_64 rng = job_rng(99, 0);
    std::uniform_int_distribution<int> length(1, 3), pick(0, 3);
    for (int w = 0; w < 20; ++w) {
        std::vector<SU2Builder> f;
        const int l = length(rng);
        for (int k = 0; k < l; ++k) f.push_back(atoms[static_cast<std::size_t>(pick(rng))]);
        phis.push_back(product(f));
    }
    for (int K : {16, 32}) {
        DiracConfig c;
        c.K = K;
        for (const auto& phi : phis) o.require(twisted_commutator(c, phi, 3, 4).residual.relative(), kOperatorTol);
    }
    o.note = "a, c, a*, c* and 20 random words, twist 1, K in {16, 32}, interior margin 4";
    return o;
}

Outcome collapsed_closed_forms() {
    Outcome o;
    const double qd = 0.5;
    const int K = 32, margin = 4, n = K - margin;
    DiracConfig c;
    c.K = K;
    const DiscGrid grid(qd, K);
    const HEFElements ha = apply_hef_collapsed(su2::a(grid), c);
    const HEFElements hc = apply_hef_collapsed(su2::c(grid), c);

    const oracle::Real q(qd);
    const oracle::Matrix Z = oracle::z(q, K), Zs = oracle::z_star(q, K), Y = oracle::y(q, K);
    const oracle::Matrix Yinv = oracle::y(q, K, -1.0);
    const oracle::Cplx I(0, 1);
    // Brute force from the operator formulas with dense 50-digit commutators.
    const oracle::Matrix T1a = oracle::derivation(q, Z, true, 1);
    const oracle::Matrix T2a = oracle::derivation(q, Z, false, 1);
    const oracle::Matrix H_a = T1a * Z * Yinv - T2a * Zs * Yinv;
    const oracle::Matrix F_a = oracle::Cplx(q) * T1a;
    const oracle::Matrix E_a = oracle::Cplx(-1) * T2a;
    // c = y (x) e^{it}: T0(c) = i y^{-1} y = i.
    const oracle::Matrix T2c = oracle::derivation(q, Y, false, 1);
    const oracle::Matrix E_c = oracle::Cplx(-1) * T2c - (I * oracle::Cplx(1 / (q * (1 + q)))) * (I * Z);

    auto part = [&](const SU2Element& x, int mode) -> Eigen::MatrixXcd {
        const DiscElement* p = x.part(mode);
        return p ? to_matrix(*p) : Eigen::MatrixXcd::Zero(K, K);
    };
    const oracle::Matrix Zq = oracle::Cplx(1 / q) * Z;
    // Library against brute force, and brute force against the closed forms.
    o.require(oracle::max_diff(H_a, part(ha.H, 0), n), kAlgebraTol);
    o.require(oracle::max_diff(Zq, part(ha.H, 0), n), kAlgebraTol);
    o.require(oracle::max_diff(E_a, part(ha.E, -1), n) + (ha.E.is_zero() ? 0.0 : 1.0), kAlgebraTol);
    o.require(oracle::max_diff(F_a, part(ha.F, 1), n), kAlgebraTol);
    o.require(oracle::max_diff(oracle::Cplx(q) * Y, part(ha.F, 1), n), kAlgebraTol);
    o.require(oracle::max_diff(E_c, part(hc.E, 0), n), kAlgebraTol);
    o.require(oracle::max_diff(Zq, part(hc.E, 0), n), kAlgebraTol);
    o.require(oracle::max_abs(H_a - Zq, n) + oracle::max_abs(E_c - Zq, n) + oracle::max_abs(E_a, n), kAlgebraTol);
    o.note = "H(a) = z/q, E(a) = 0, F(a) = q y (x) e^{it}, E(c) = z/q vs 50-digit dense evaluation, K = 32";
    return o;
}

Outcome integral_closed_form() {
    Outcome o;
    double worst_excess = 0.0, worst_error = 0.0, worst_bound = 0.0;
    for (double qd : {0.3, 0.5, 0.9})
        for (double alpha : {1.0, 2.0}) {
            const IntegralResult r = integrate(disc::one(DiscGrid(qd, 64)), alpha);
            const oracle::Real q(qd);
            const oracle::Real exact = (1 - q) / (1 - oracle::power(q, alpha));
            const double err = static_cast<double>(abs(oracle::Real(r.value.real()) - exact)) + std::abs(r.value.imag());
            // Within the tail bound, allowing rounding of the finite sum.
            const double excess = std::max(0.0, err - r.tail_bound - 64 * 2.3e-16);
            worst_excess = std::max(worst_excess, excess);
            worst_error = std::max(worst_error, err);
            worst_bound = std::max(worst_bound, r.tail_bound);
        }
    o.require(worst_excess, kAlgebraTol);
    char buf[200];
    std::snprintf(buf, sizeof buf, "excess over tail bound; largest error %.3g, largest tail bound %.3g", worst_error,
                  worst_bound);
    o.note = "integrate(one, alpha) vs (1-q)/(1-q^alpha), K = 64, alpha in {1, 2}, q in {0.3, 0.5, 0.9}; " +
             std::string(buf);
    return o;
}

Outcome grade_conservation() {
    Outcome o;
    long nonzero = 0;
    for (int twist : {1, 2}) {
        DiracConfig c;
        c.twist = twist;
        const DiracMatrix d = assemble_dirac(c);
        for (int col = 0; col < d.matrix.outerSize(); ++col)
            for (SparseOp::InnerIterator it(d.matrix, col); it; ++it)
                if (d.grade(it.row()) != d.grade(col) && (it.value().real() != 0.0 || it.value().imag() != 0.0))
                    ++nonzero;
    }
    o.require(static_cast<double>(nonzero), 0.0);
    o.note = std::to_string(nonzero) + " nonzero cross-grade entries, twists 1 and 2, K = 16, M = 4";
    return o;
}

Outcome spectrum_sanity() {
    Outcome o;
    DiracConfig c;
    SpectrumOptions opt;
    opt.delta_step = 8;
    const SpectrumReport first = spectrum(c, opt);
    setenv("QDIRAC_THREADS", "1", 1);
    const SpectrumReport second = spectrum(c, opt);
    unsetenv("QDIRAC_THREADS");
    bool same = first.values.size() == second.values.size();
    for (std::size_t i = 0; same && i < first.values.size(); ++i) {
        const auto& x = first.values[i];
        const auto& y = second.values[i];
        same = x.grade == y.grade && x.index == y.index && x.value == y.value && x.delta_K == y.delta_K;
    }
    double largest = 0.0, max_delta = 0.0;
    bool deltas = !first.values.empty();
    for (const auto& e : first.values) {
        largest = std::max(largest, std::abs(e.value));
        deltas = deltas && std::isfinite(e.delta_K);
        if (std::isfinite(e.delta_K)) max_delta = std::max(max_delta, e.delta_K);
    }
    o.require(first.max_abs_imag / std::max(1.0, largest), kAlgebraTol);
    if (!same || !deltas) o.pass = false;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu eigenvalues K = 16 vs K = 24, deterministic across thread counts: %s, max delta_K %.3g, "
                  "hermiticity defect %.3g",
                  first.values.size(), same ? "yes" : "no", max_delta, first.hermiticity_defect);
    o.note = buf;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "quantum disc relations", disc_relations},
        {2, "SU_q(2) relations under rho_tilde", su2_relations},
        {3, "twisted Leibniz rules", twisted_leibniz},
        {4, "adjoint identities", adjoint_identities},
        {5, "symmetry of D and D_1", dirac_symmetry},
        {6, "twisted commutator oracle", commutator_oracle},
        {7, "collapsed-element closed forms", collapsed_closed_forms},
        {8, "integral closed form", integral_closed_form},
        {9, "grade conservation", grade_conservation},
        {10, "spectrum sanity", spectrum_sanity},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2d %s  %-36s max residual %.3g (tol %.0e)  %s\n", c.id, o.pass ? "PASS" : "FAIL",
                    c.title, o.residual, o.tolerance, o.note.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
