#include "qdirac/l2_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdirac/errors.hpp"

namespace qdirac {

L2Space::L2Space(double q, int size, double alpha) : grid_(q, size), alpha_(alpha) {
    if (!std::isfinite(alpha)) throw ParameterError("alpha must be finite");
}

L2Vector::L2Vector(L2Space space)
    : space_(space), coeffs_(Eigen::MatrixXcd::Zero(space.size(), space.size())) {}

L2Vector::L2Vector(L2Space space, Eigen::MatrixXcd coeffs) : space_(space), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != space_.size() || coeffs_.cols() != space_.size()) {
        throw ParameterError("coefficient array must be K x K");
    }
}

L2Vector L2Vector::matrix_unit(const L2Space& space, int j, int k) {
    if (j < 0 || k < 0 || j >= space.size() || k >= space.size()) {
        throw ParameterError("matrix unit index outside the truncation");
    }
    L2Vector v(space);
    v.coeffs_(j, k) = 1.0;
    return v;
}

bool L2Vector::interior_supported(int margin) const {
    const int n = space_.size();
    const int edge = std::max(0, n - margin);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if ((j >= edge || k >= edge) && coeffs_(j, k) != cplx{}) return false;
    return true;
}

L2Vector& L2Vector::operator+=(const L2Vector& other) {
    if (!(space_ == other.space_)) throw ParameterError("mismatched L2 spaces");
    coeffs_ += other.coeffs_;
    return *this;
}

L2Vector& L2Vector::operator-=(const L2Vector& other) {
    if (!(space_ == other.space_)) throw ParameterError("mismatched L2 spaces");
    coeffs_ -= other.coeffs_;
    return *this;
}

L2Vector& L2Vector::operator*=(cplx c) {
    coeffs_ *= c;
    return *this;
}

IntegralResult integrate(const DiscElement& f, double alpha) {
    IntegralResult out;
    const GridFunction* f0 = f.term(0);
    if (f0 == nullptr) return out;
    const int n = f.size();
    const double q = f.q();

    cplx sum{};
    for (int k = 0; k < n; ++k) sum += f0->value(k) * std::pow(q, alpha * k);
    out.value = (1.0 - q) * sum;

    if (f0->has_limit() && f0->limit() == cplx{} && f0->settled()) return out;
    if (f0->has_limit() && alpha > 0.0) {
        const double sup = f0->max_abs_value();
        out.tail_bound = (1.0 - q) * sup * std::pow(q, alpha * n) / (1.0 - std::pow(q, alpha));
        return out;
    }
    if (f0->has_limit() && f0->limit() != cplx{}) {
        throw DivergenceError("integral diverges: f_0(0) != 0 with alpha = " + std::to_string(alpha));
    }
    // Unbounded or decaying-to-zero coefficient: ratio test on the last weighted terms.
    if (n < 4) throw DivergenceError("integral: grid too small to test convergence");
    double ratio = 0.0;
    for (int k = n - 3; k < n; ++k) {
        const double prev = std::abs(f0->value(k - 1)) * std::pow(q, alpha * (k - 1));
        const double cur = std::abs(f0->value(k)) * std::pow(q, alpha * k);
        if (prev == 0.0) {
            if (cur != 0.0) throw DivergenceError("integral: weighted terms do not decay");
            continue;
        }
        ratio = std::max(ratio, cur / prev);
    }
    if (ratio >= 1.0) throw DivergenceError("integral: weighted terms do not decay");
    const double last = std::abs(f0->value(n - 1)) * std::pow(q, alpha * (n - 1));
    out.tail_bound = (1.0 - q) * last * ratio / (1.0 - ratio);
    return out;
}

cplx inner(const L2Vector& f, const L2Vector& g) {
    if (!(f.space() == g.space())) throw ParameterError("inner: mismatched L2 spaces");
    const auto& s = f.space();
    cplx sum{};
    for (int k = 0; k < s.size(); ++k) sum += s.weight(k) * f.coeffs().col(k).dot(g.coeffs().col(k));
    return sum;
}

double norm(const L2Vector& f) { return std::sqrt(std::max(0.0, inner(f, f).real())); }

L2Vector lmul(const DiscElement& x, const L2Vector& v) {
    if (!(x.grid() == v.space().grid())) throw ParameterError("lmul: mismatched q or K");
    return L2Vector(v.space(), to_matrix(x) * v.coeffs());
}

L2Vector rmul(const DiscElement& x, const L2Vector& v) {
    if (!(x.grid() == v.space().grid())) throw ParameterError("rmul: mismatched q or K");
    return L2Vector(v.space(), v.coeffs() * to_matrix(x));
}

DiscElement to_element(const L2Vector& v) {
    const int n = v.space().size();
    DiscElement out(v.space().grid());
    for (int d = -(n - 1); d <= n - 1; ++d) {
        std::vector<cplx> table(static_cast<std::size_t>(n));
        bool any = false;
        for (int m = 0; m + std::abs(d) < n; ++m) {
            const int j = d >= 0 ? m + d : m;
            const int k = d >= 0 ? m : m - d;
            table[static_cast<std::size_t>(m)] = v.coeffs()(j, k);
            any = any || table[static_cast<std::size_t>(m)] != cplx{};
        }
        if (any) out.set_term(d, GridFunction::with_limit(0.0, std::move(table)));
    }
    return out;
}

L2Vector to_vector(const L2Space& space, const DiscElement& x) {
    if (!(x.grid() == space.grid())) throw ParameterError("to_vector: mismatched q or K");
    return L2Vector(space, to_matrix(x));
}

}  // namespace qdirac
