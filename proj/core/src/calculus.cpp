#include "qdirac/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qdirac/errors.hpp"

namespace qdirac {

namespace {

/// y^beta x, computed entry-wise from the row index so that no table is read past the grid.
DiscElement left_scale_y(const DiscElement& x, double beta) {
    const int n = x.size();
    const DiscGrid& grid = x.grid();
    DiscElement out(grid);
    for (const auto& [d, f] : x.terms()) {
        std::vector<cplx> values(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m) {
            const int row = d >= 0 ? m + d : m;
            values[static_cast<std::size_t>(m)] = f.value(m) * grid.power(beta * row);
        }
        if (beta > 0.0 && f.has_limit()) {
            out.set_term(d, GridFunction::with_limit(0.0, std::move(values)));
        } else {
            out.set_term(d, GridFunction::unbounded(std::move(values)));
        }
    }
    out.limit_exact_extent(x.exact_extent());
    return out;
}

double inf_norm(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double inf_norm(const Eigen::VectorXcd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd interior_block(const DiscElement& x, int margin) {
    const int n = std::max(0, x.size() - margin);
    return to_matrix(x, x.size()).topLeftCorner(n, n);
}

}  // namespace

const char* name(Derivation kind) noexcept {
    switch (kind) {
        case Derivation::d_z: return "d_z";
        case Derivation::d_zbar: return "d_zbar";
        case Derivation::T1: return "T1";
        case Derivation::T2: return "T2";
    }
    return "?";
}

int twist_of(Derivation kind) noexcept {
    return kind == Derivation::T1 || kind == Derivation::T2 ? 1 : 2;
}

void check_domain(const DiscElement& x, const std::string& operation) {
    const int n = x.size();
    const int hi = std::min(n, x.exact_extent()) - 2;  // stay clear of truncation artefacts
    const int half = n / 2;
    if (hi - 1 <= half) return;
    const double q = x.q();
    for (const auto& [d, f] : x.terms()) {
        if (f.has_limit()) continue;
        if (f.value(hi) == cplx{} && f.value(hi - 1) == cplx{}) continue;  // finitely supported
        double low = 0.0;
        double top = 0.0;
        for (int k = 0; k < half; ++k) low = std::max(low, std::abs(f.value(k)));
        for (int k = half; k <= hi; ++k) top = std::max(top, std::abs(f.value(k)));
        if (low == 0.0) continue;
        const double threshold = std::pow(q, -(hi - half) / 4.0);
        if (top > threshold * low) {
            std::ostringstream msg;
            msg << operation << ": coefficient of degree " << d
                << " grows geometrically toward the grid edge (element outside the derivation domain)";
            throw DomainError(msg.str(), operation, d);
        }
    }
}

DiscElement apply(Derivation kind, const DiscElement& f) {
    const DiscGrid& grid = f.grid();
    const double q = grid.q();
    const bool conj_kind = kind == Derivation::d_z || kind == Derivation::T1;
    const DiscElement w = conj_kind ? disc::z_star(grid) : disc::z(grid);
    const DiscElement comm = mul(w, f) - mul(f, w);
    const double power = twist_of(kind) == 1 ? -1.0 : -2.0;
    DiscElement out = left_scale_y(comm, power);
    out *= (conj_kind ? -1.0 : 1.0) / (1.0 - q * q);
    check_domain(out, name(kind));
    return out;
}

SU2Element apply(Derivation kind, const SU2Element& f) {
    SU2Element out(f.grid());
    for (const auto& [m, x] : f.parts()) out.add(m, apply(kind, x));
    return out;
}

Residual combine(const Residual& a, const Residual& b) noexcept {
    return a.relative() >= b.relative() ? a : b;
}

Residual leibniz_residual(Derivation kind, const DiscElement& f, const DiscElement& g, int margin) {
    const DiscElement lhs = apply(kind, mul(f, g));
    const DiscElement t1 = mul(apply(kind, f), g);
    const DiscElement t2 = mul(sigma(f, twist_of(kind)), apply(kind, g));
    const Eigen::MatrixXcd a = interior_block(lhs, margin);
    const Eigen::MatrixXcd b = interior_block(t1, margin);
    const Eigen::MatrixXcd c = interior_block(t2, margin);
    return {inf_norm(Eigen::MatrixXcd(a - b - c)), inf_norm(a) + inf_norm(b) + inf_norm(c)};
}

SU2Element t0_apply(const SU2Element& f, int kind) {
    if (kind != 1 && kind != 2) throw ParameterError("t0_apply: kind must be 1 or 2");
    SU2Element out(f.grid());
    for (const auto& [m, x] : f.parts()) {
        if (m == 0) continue;
        DiscElement v = left_scale_y(x, -kind);
        v *= cplx(0.0, m);
        out.add(m, v);
    }
    return out;
}

Residual t0_leibniz_residual(int kind, const SU2Element& f, const SU2Element& g, int margin) {
    const SU2Element lhs = t0_apply(mul(f, g), kind);
    const SU2Element rhs = mul(t0_apply(f, kind), g) + mul(sigma(f, kind), t0_apply(g, kind));
    Residual r;
    const DiscElement zero(f.grid());
    std::set<int> modes;
    for (const auto& kv : lhs.parts()) modes.insert(kv.first);
    for (const auto& kv : rhs.parts()) modes.insert(kv.first);
    for (int m : modes) {
        const DiscElement* a = lhs.part(m);
        const DiscElement* b = rhs.part(m);
        const Eigen::MatrixXcd ma = interior_block(a ? *a : zero, margin);
        const Eigen::MatrixXcd mb = interior_block(b ? *b : zero, margin);
        r.absolute = std::max(r.absolute, inf_norm(Eigen::MatrixXcd(ma - mb)));
        r.scale = std::max(r.scale, inf_norm(ma) + inf_norm(mb));
    }
    return r;
}

DiscElement Word::evaluate(const DiscGrid& grid) const {
    DiscElement out = disc::one(grid);
    for (const auto& g : factors) out = mul(out, make_generator(g, grid));
    return out;
}

std::string Word::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s << ' ';
        const auto& g = factors[i];
        switch (g.kind) {
            case Generator::Kind::one: s << "1"; break;
            case Generator::Kind::z: s << "z"; break;
            case Generator::Kind::z_star: s << "z*"; break;
            case Generator::Kind::y: s << "y"; break;
            case Generator::Kind::y_pow: s << "y^" << g.exponent; break;
            case Generator::Kind::s: s << "s"; break;
            case Generator::Kind::s_star: s << "s*"; break;
            case Generator::Kind::indicator: s << "ind(" << g.index << ")"; break;
        }
    }
    return s.str();
}

const char* name(OperatorKind kind) noexcept {
    switch (kind) {
        case OperatorKind::T1: return "T1";
        case OperatorKind::T2: return "T2";
        case OperatorKind::d_z: return "d_z";
        case OperatorKind::d_zbar: return "d_zbar";
        case OperatorKind::T0: return "T0";
        case OperatorKind::S0: return "S0";
        case OperatorKind::inv_y2: return "y^-2";
    }
    return "?";
}

int twist_of(OperatorKind kind) noexcept {
    switch (kind) {
        case OperatorKind::T1:
        case OperatorKind::T2:
        case OperatorKind::T0: return 1;
        default: return 2;
    }
}

SU2Element apply_kind(OperatorKind kind, const SU2Element& f) {
    switch (kind) {
        case OperatorKind::T1: return apply(Derivation::T1, f);
        case OperatorKind::T2: return apply(Derivation::T2, f);
        case OperatorKind::d_z: return apply(Derivation::d_z, f);
        case OperatorKind::d_zbar: return apply(Derivation::d_zbar, f);
        case OperatorKind::T0: return t0_apply(f, 1);
        case OperatorKind::S0: return t0_apply(f, 2);
        case OperatorKind::inv_y2: {
            SU2Element out(f.grid());
            for (const auto& [m, x] : f.parts()) out.add(m, left_scale_y(x, -2.0));
            return out;
        }
    }
    return SU2Element(f.grid());
}

SU2Element apply_term(const OperatorTerm& term, const SU2Element& f) {
    SU2Element out = mul_right(apply_kind(term.kind, f), term.right.evaluate(f.grid())).shifted(term.mode_shift);
    out *= term.scalar;
    return out;
}

SparseOp kind_matrix(OperatorKind kind, const OperatorAlgebra& algebra) {
    const DiscGrid& grid = algebra.space().grid();
    const double q = grid.q();
    const double k = 1.0 / (1.0 - q * q);
    auto commutator = [&](const DiscElement& w) -> SparseOp { return algebra.left(w) - algebra.right(w); };
    const SparseOp yinv = algebra.left(disc::y_pow(grid, -1.0));
    const SparseOp yinv2 = algebra.left(disc::y_pow(grid, -2.0));
    switch (kind) {
        case OperatorKind::T1: return SparseOp(-k * (yinv * commutator(disc::z_star(grid))));
        case OperatorKind::T2: return SparseOp(k * (yinv * commutator(disc::z(grid))));
        case OperatorKind::d_z: return SparseOp(-k * (yinv2 * commutator(disc::z_star(grid))));
        case OperatorKind::d_zbar: return SparseOp(k * (yinv2 * commutator(disc::z(grid))));
        case OperatorKind::T0: return SparseOp(yinv * algebra.dt());
        case OperatorKind::S0: return SparseOp(yinv2 * algebra.dt());
        case OperatorKind::inv_y2: return yinv2;
    }
    return algebra.identity();
}

SparseOp term_matrix(const OperatorTerm& term, const OperatorAlgebra& algebra) {
    const SparseOp r = algebra.right(term.right.evaluate(algebra.space().grid()));
    SparseOp out = algebra.mode_shift(term.mode_shift) * (r * kind_matrix(term.kind, algebra));
    out *= term.scalar;
    return out;
}

TermCommutatorResult term_commutator(const OperatorTerm& term, const SU2Builder& f, const Eigen::VectorXcd& psi,
                               const TruncatedSpace& space, int pad, int mode_pad) {
    if (psi.size() != space.dimension()) throw ParameterError("term_commutator: vector size mismatch");
    const TruncatedSpace outer = space.padded(pad, mode_pad);
    const OperatorAlgebra algebra(outer);
    const SU2Element fp = f(outer.grid());
    const SU2Element fs = sigma(fp, twist_of(term.kind));
    const SparseOp a = term_matrix(term, algebra);
    const Eigen::VectorXcd v = embed_vector(psi, space, outer);

    const Eigen::VectorXcd first = a * (left_action(fp, algebra) * v);
    const Eigen::VectorXcd second = left_action(fs, algebra) * (a * v);
    const Eigen::VectorXcd composed = first - second;
    Eigen::VectorXcd closed = Eigen::VectorXcd::Zero(v.size());
    if (term.kind != OperatorKind::inv_y2) {
        const SU2Element tf = apply_kind(term.kind, fp);
        const SparseOp r = algebra.right(term.right.evaluate(outer.grid()));
        closed = term.scalar * (algebra.mode_shift(term.mode_shift) * (r * (left_action(tf, algebra) * v)));
    }
    TermCommutatorResult out;
    out.composed = restrict_vector(composed, outer, space);
    out.closed_form = restrict_vector(closed, outer, space);
    // Scaled by the two products whose difference is the commutator.
    out.residual = {inf_norm(Eigen::VectorXcd(out.composed - out.closed_form)),
                    std::max(inf_norm(Eigen::VectorXcd(restrict_vector(first, outer, space))),
                             inf_norm(Eigen::VectorXcd(restrict_vector(second, outer, space))))};
    return out;
}

}  // namespace qdirac
