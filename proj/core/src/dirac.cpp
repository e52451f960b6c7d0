#include "qdirac/dirac.hpp"

#include <cmath>
#include <sstream>

#include "qdirac/errors.hpp"
#include "qdirac/parallel.hpp"
#include "qdirac/random.hpp"

namespace qdirac {

double DiracConfig::alpha_value() const { return alpha.value_or(twist == 1 ? 2.0 : 1.0); }

double DiracConfig::gamma_value() const { return gamma.value_or(q / (1.0 + q)); }

void DiracConfig::validate() const {
    if (!(q > 0.0 && q < 1.0)) throw ParameterError("q must lie in the open interval (0, 1)");
    if (twist != 1 && twist != 2) throw ParameterError("twist must be 1 or 2");
    const double a = alpha_value();
    if ((twist == 1 && a != 2.0) || (twist == 2 && a != 1.0)) {
        std::ostringstream msg;
        msg << "twist " << twist << " requires alpha = " << (twist == 1 ? 2 : 1) << ", got alpha = " << a;
        throw ParameterError(msg.str());
    }
    if (!std::isfinite(c)) throw ParameterError("c must be finite");
    if (!(std::isfinite(gamma_value()) && gamma_value() != 0.0)) throw ParameterError("gamma_q must be a nonzero real");
    if (!std::isfinite(shift)) throw ParameterError("shift must be finite");
    if (K < 1) throw ParameterError("K must be positive");
    if (M < 0) throw ParameterError("M must be non-negative");
}

TruncatedSpace DiracConfig::space() const {
    validate();
    return TruncatedSpace(q, alpha_value(), K, M);
}

DiracConfig DiracConfig::with_size(int k, int m) const {
    DiracConfig out = *this;
    out.K = k;
    out.M = m;
    return out;
}

namespace {
using G = Generator;
Word word(std::initializer_list<Generator> g) { return Word{std::vector<Generator>(g)}; }
const cplx I{0.0, 1.0};
}  // namespace

OperatorTable operator_table(const DiracConfig& config) {
    config.validate();
    const double q = config.q;
    OperatorTable t;
    if (config.twist == 1) {
        t.H = {{1.0, OperatorKind::T1, word({G::z(), G::y_pow(-1)}), 0},
               {-1.0, OperatorKind::T2, word({G::z_star(), G::y_pow(-1)}), 0},
               {I, OperatorKind::T0, word({G::y()}), 0}};
        t.E = {{-1.0, OperatorKind::T2, word({}), -1},
               {-I / (q * (1.0 + q)), OperatorKind::T0, word({G::z()}), -1}};
        t.F = {{q, OperatorKind::T1, word({}), 1},
               {-I * q / (1.0 + q), OperatorKind::T0, word({G::z_star()}), 1}};
    } else {
        const double g = config.gamma_value();
        t.H = {{q, OperatorKind::d_z, word({G::z()}), 0},
               {-1.0, OperatorKind::d_zbar, word({G::z_star()}), 0},
               {I, OperatorKind::S0, word({G::y(), G::y()}), 0}};
        // z^op y^op acts as right multiplication by y z.
        t.E = {{-1.0 / q, OperatorKind::d_zbar, word({G::y()}), -1},
               {-I * g, OperatorKind::S0, word({G::y(), G::z()}), -1},
               {-g / 2.0, OperatorKind::inv_y2, word({G::y(), G::z()}), -1}};
        t.F = {{q, OperatorKind::d_z, word({G::y()}), 1},
               {-I * g, OperatorKind::S0, word({G::y(), G::z_star()}), 1},
               {g / 2.0, OperatorKind::inv_y2, word({G::y(), G::z_star()}), 1}};
    }
    return t;
}

const char* name(Reading reading) noexcept { return reading == Reading::collapsed ? "collapsed" : "two_sided"; }

namespace {

SU2Element apply_terms(const std::vector<OperatorTerm>& terms, const SU2Element& phi) {
    SU2Element out(phi.grid());
    for (const auto& t : terms) out += apply_term(t, phi);
    return out;
}

std::vector<TwoSidedTerm> two_sided_terms(const std::vector<OperatorTerm>& terms, const SU2Element& phi) {
    std::vector<TwoSidedTerm> out;
    for (const auto& t : terms) {
        if (t.kind == OperatorKind::inv_y2) continue;  // commutes with the twisted action
        SU2Element left = apply_kind(t.kind, phi);
        if (left.is_zero()) continue;
        out.push_back({t.scalar, std::move(left), t.right.evaluate(phi.grid()), t.mode_shift});
    }
    return out;
}

SparseOp sum_terms(const std::vector<OperatorTerm>& terms, const OperatorAlgebra& algebra) {
    const long n = algebra.space().dimension();
    SparseOp out(n, n);
    for (const auto& t : terms) out += term_matrix(t, algebra);
    return out;
}

}  // namespace

HEFElements apply_hef_collapsed(const SU2Element& phi, const DiracConfig& config) {
    const OperatorTable t = operator_table(config);
    return {apply_terms(t.H, phi), apply_terms(t.E, phi), apply_terms(t.F, phi)};
}

HEFTwoSided apply_hef_two_sided(const SU2Element& phi, const DiracConfig& config) {
    const OperatorTable t = operator_table(config);
    return {two_sided_terms(t.H, phi), two_sided_terms(t.E, phi), two_sided_terms(t.F, phi)};
}

SparseOp two_sided_matrix(const std::vector<TwoSidedTerm>& terms, const OperatorAlgebra& algebra) {
    const long n = algebra.space().dimension();
    SparseOp out(n, n);
    for (const auto& t : terms) {
        SparseOp m = algebra.mode_shift(t.mode_shift) * (algebra.right(t.right) * left_action(t.left, algebra));
        out += t.scalar * m;
    }
    return out;
}

DiracComponents assemble_components(const DiracConfig& config, const OperatorAlgebra& algebra) {
    const OperatorTable t = operator_table(config);
    return {sum_terms(t.H, algebra), sum_terms(t.E, algebra), sum_terms(t.F, algebra)};
}

SparseOp assemble_dirac_on(const DiracConfig& config, const OperatorAlgebra& algebra) {
    const DiracComponents d = assemble_components(config, algebra);
    const SparseOp id = algebra.identity();
    const SparseOp h = d.H - config.shift * id;
    const SparseOp hm = -d.H - config.shift * id;
    return block2x2(h, config.c * d.E, config.c * d.F, hm);
}

std::map<int, std::vector<long>> DiracMatrix::blocks() const {
    std::map<int, std::vector<long>> out;
    for (long i = 0; i < dimension(); ++i) out[grade(i)].push_back(i);
    return out;
}

DiracMatrix assemble_dirac(const DiracConfig& config) {
    const TruncatedSpace inner = config.space();
    const TruncatedSpace outer = inner.padded(kIndexPad, kModePad);
    const OperatorAlgebra algebra(outer);
    return {config, inner, compress(assemble_dirac_on(config, algebra), outer, inner)};
}

double cross_grade_max(const DiracMatrix& d) {
    double worst = 0.0;
    for (int c = 0; c < d.matrix.outerSize(); ++c)
        for (SparseOp::InnerIterator it(d.matrix, c); it; ++it)
            if (d.grade(it.row()) != d.grade(c)) worst = std::max(worst, std::abs(it.value()));
    return worst;
}

long cross_grade_count(const DiracMatrix& d) {
    long count = 0;
    for (int c = 0; c < d.matrix.outerSize(); ++c)
        for (SparseOp::InnerIterator it(d.matrix, c); it; ++it)
            if (d.grade(it.row()) != d.grade(c) && it.value() != cplx{}) ++count;
    return count;
}

namespace {

struct Relation {
    std::string name;
    SparseOp left;
    SparseOp right;
};

std::vector<Relation> relations(const DiracConfig& config, const OperatorAlgebra& a) {
    const double q = config.q;
    const DiscGrid& grid = a.space().grid();
    const auto R = [&](std::initializer_list<Generator> g) { return a.right(word(g).evaluate(grid)); };
    const SparseOp yinv = a.left(disc::y_pow(grid, -1.0));
    const SparseOp yinv2 = a.left(disc::y_pow(grid, -2.0));
    const SparseOp idt = I * a.dt();
    const SparseOp up = a.mode_shift(1);
    const SparseOp down = a.mode_shift(-1);
    const DiracComponents d = assemble_components(config, a);

    std::vector<Relation> out;
    if (config.twist == 1) {
        const SparseOp t1 = kind_matrix(OperatorKind::T1, a);
        const SparseOp t2 = kind_matrix(OperatorKind::T2, a);
        const SparseOp rz = R({G::z()});
        const SparseOp rzs = R({G::z_star()});
        const SparseOp rzyi = R({G::z(), G::y_pow(-1)});
        const SparseOp rzsyi = R({G::z_star(), G::y_pow(-1)});
        const SparseOp sigma1 = yinv * R({G::y()});
        out.push_back({"T1_adjoint", t1, SparseOp(1.0 / (q * q * (1.0 + q)) * (rz * yinv) - (1.0 / q) * t2)});
        out.push_back({"T2_adjoint", t2, SparseOp(q / (1.0 + q) * (rzs * yinv) - q * t1)});
        out.push_back({"zyinv_T1_adjoint", rzyi * t1, SparseOp(-sigma1 - rzsyi * t2)});
        out.push_back({"zsyinv_T2_adjoint", rzsyi * t2, SparseOp(-sigma1 - rzyi * t1)});
        const SparseOp zd = rz * yinv * down;
        const SparseOp zsu = rzs * yinv * up;
        out.push_back({"zs_dt_adjoint", zsu * idt, SparseOp(1.0 / (q * q) * zd + 1.0 / (q * q) * (zd * idt))});
        out.push_back({"z_dt_adjoint", zd * idt, SparseOp(-q * q * zsu + q * q * (zsu * idt))});
    } else {
        const SparseOp dz = kind_matrix(OperatorKind::d_z, a);
        const SparseOp dzb = kind_matrix(OperatorKind::d_zbar, a);
        const SparseOp ry = R({G::y()});
        const SparseOp qzdz = q * (R({G::z()}) * dz) - R({G::z_star()}) * dzb;
        const SparseOp yydt = R({G::y(), G::y()}) * yinv2 * idt;
        const SparseOp zyd = R({G::y(), G::z()}) * yinv2 * down;
        const SparseOp zsyu = R({G::y(), G::z_star()}) * yinv2 * up;
        const SparseOp e_side = 0.5 * zyd + zyd * idt;
        const SparseOp f_side = -0.5 * zsyu + zsyu * idt;
        out.push_back({"y_dz_adjoint", q * (ry * dz), SparseOp(-(1.0 / q) * (ry * dzb))});
        out.push_back({"z_dz_symmetric", qzdz, qzdz});
        out.push_back({"y2_dt_symmetric", yydt, yydt});
        out.push_back({"zy_shift_adjoint", e_side, f_side});
        out.push_back({"zsy_shift_adjoint", f_side, e_side});
    }
    const std::string suffix = config.twist == 1 ? "" : "1";
    out.push_back({"H" + suffix + "_symmetric", d.H, d.H});
    out.push_back({"F" + suffix + "_in_E" + suffix + "_adjoint", d.F, d.E});
    out.push_back({"E" + suffix + "_in_F" + suffix + "_adjoint", d.E, d.F});
    return out;
}

double weighted_norm(const TruncatedSpace& s, const Eigen::VectorXcd& v) {
    const long n = s.dimension();
    double sum = 0.0;
    for (long i = 0; i < v.size(); ++i) sum += s.weight(i % n) * std::norm(v[i]);
    return std::sqrt(sum);
}

cplx weighted_inner(const TruncatedSpace& s, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) {
    const long n = s.dimension();
    cplx sum{};
    for (long i = 0; i < f.size(); ++i) sum += s.weight(i % n) * std::conj(f[i]) * g[i];
    return sum;
}

AdjointCheck check_pairs(const std::string& name, const TruncatedSpace& s, const SparseOp& l, const SparseOp& r,
                         int blocks, const AdjointOptions& options, std::uint64_t stream) {
    AdjointCheck out;
    out.name = name;
    out.alpha = s.alpha();
    out.pairs = options.pairs;
    std::mt19937_64 rng = job_rng(options.seed, stream);
    for (int p = 0; p < options.pairs; ++p) {
        const Eigen::VectorXcd f = random_interior_vector(s, blocks, options.margin, 1, rng);
        const Eigen::VectorXcd g = random_interior_vector(s, blocks, options.margin, 1, rng);
        const Eigen::VectorXcd lf = l * f;
        const Eigen::VectorXcd rg = r * g;
        const Residual res{std::abs(weighted_inner(s, lf, g) - weighted_inner(s, f, rg)),
                           weighted_norm(s, lf) * weighted_norm(s, g) + weighted_norm(s, f) * weighted_norm(s, rg)};
        out.residual = combine(out.residual, res);
    }
    return out;
}

}  // namespace

std::vector<AdjointCheck> adjoint_residuals(const DiracConfig& config, const AdjointOptions& options) {
    const TruncatedSpace inner = config.space();
    const TruncatedSpace outer = inner.padded(kIndexPad, kModePad);
    const OperatorAlgebra algebra(outer);
    const std::vector<Relation> rel = relations(config, algebra);
    std::vector<AdjointCheck> out(rel.size());
    parallel_for(rel.size(), [&](std::size_t i) {
        const SparseOp l = compress(rel[i].left, outer, inner);
        const SparseOp r = compress(rel[i].right, outer, inner);
        out[i] = check_pairs(rel[i].name, inner, l, r, 1, options, 100 * static_cast<std::uint64_t>(config.twist) + i);
    });
    return out;
}

AdjointCheck symmetry_residual(const DiracConfig& config, const AdjointOptions& options) {
    const DiracMatrix d = assemble_dirac(config);
    return check_pairs(config.twist == 1 ? "D_symmetric" : "D1_symmetric", d.space, d.matrix, d.matrix, 2, options,
                       1000 + static_cast<std::uint64_t>(config.twist));
}

CommutatorCheck twisted_commutator(const DiracConfig& config, const SU2Builder& phi, int word_length, int margin) {
    const TruncatedSpace inner = config.space();
    const int len = std::max(1, word_length);
    const TruncatedSpace outer = inner.padded(len + 3, len + 2);
    const OperatorAlgebra algebra(outer);

    const SU2Element p = phi(outer.grid());
    const SU2Element ps = sigma(p, config.sigma_exponent());
    const SparseOp lp = left_action(p, algebra);
    const SparseOp lps = left_action(ps, algebra);
    const long n = outer.dimension();
    const SparseOp zero(n, n);

    const SparseOp d = assemble_dirac_on(config, algebra);
    const SparseOp first = compress(d * block2x2(lp, zero, zero, lp), outer, inner);
    const SparseOp second = compress(block2x2(lps, zero, zero, lps) * d, outer, inner);

    const HEFTwoSided hef = apply_hef_two_sided(p, config);
    const SparseOp h = two_sided_matrix(hef.H, algebra);
    const SparseOp e = two_sided_matrix(hef.E, algebra);
    const SparseOp f = two_sided_matrix(hef.F, algebra);
    const SparseOp correction = -config.shift * (lp - lps);
    const SparseOp two = block2x2(h + correction, config.c * e, config.c * f, -h + correction);

    CommutatorCheck out;
    out.composed = first - second;
    out.two_sided = compress(two, outer, inner);
    const SparseOp diff = out.composed - out.two_sided;
    const long ni = inner.dimension();
    // The scale is the size of the two products whose difference is the commutator.
    auto column_max = [](const SparseOp& m, int c) {
        double v = 0.0;
        for (SparseOp::InnerIterator it(m, c); it; ++it) v = std::max(v, std::abs(it.value()));
        return v;
    };
    for (int c = 0; c < diff.outerSize(); ++c) {
        if (!inner.interior(c % ni, margin, 1)) continue;
        out.residual.absolute = std::max(out.residual.absolute, column_max(diff, c));
        out.residual.scale = std::max({out.residual.scale, column_max(first, c), column_max(second, c)});
    }
    return out;
}

namespace {
SparseOp doubled_orthonormal(const DiracMatrix& d) {
    const Eigen::VectorXd w = d.space.sqrt_weights();
    const long n = d.space.dimension();
    SparseOp out = d.matrix;
    for (int c = 0; c < out.outerSize(); ++c)
        for (SparseOp::InnerIterator it(out, c); it; ++it) it.valueRef() *= w[it.row() % n] / w[c % n];
    return out;
}
}  // namespace

GaugeReport gauge_comparison(const DiracConfig& config) {
    DiracConfig one = config;
    one.twist = 1;
    one.alpha.reset();
    DiracConfig two = config;
    two.twist = 2;
    two.alpha.reset();
    const SparseOp d = doubled_orthonormal(assemble_dirac(one));
    const SparseOp d1 = doubled_orthonormal(assemble_dirac(two));
    GaugeReport out;
    out.norm_d = d.norm();
    out.norm_d1 = d1.norm();
    const double diff = SparseOp(d - d1).norm();
    out.relative_difference = out.norm_d1 > 0.0 ? diff / out.norm_d1 : diff;
    return out;
}

}  // namespace qdirac
