#pragma once

#include <Eigen/Dense>

#include "qdirac/qdisc.hpp"

namespace qdirac {

/// The Hilbert space L2(D_q, mu_alpha) truncated to matrix units E_jk with j, k < K.
///
///     <E_jk, E_lm> = (1-q) q^{alpha k} delta_jl delta_km
class L2Space {
public:
    L2Space(double q, int size, double alpha);

    double q() const noexcept { return grid_.q(); }
    int size() const noexcept { return grid_.size(); }
    double alpha() const noexcept { return alpha_; }
    const DiscGrid& grid() const noexcept { return grid_; }

    /// Norm squared of E_jk; independent of j.
    double weight(int k) const { return (1.0 - q()) * grid_.power(alpha_ * k); }

    friend bool operator==(const L2Space&, const L2Space&) = default;

private:
    DiscGrid grid_;
    double alpha_;
};

class L2Vector {
public:
    explicit L2Vector(L2Space space);
    L2Vector(L2Space space, Eigen::MatrixXcd coeffs);

    static L2Vector matrix_unit(const L2Space& space, int j, int k);

    const L2Space& space() const noexcept { return space_; }
    /// Entry (j, k) is the coefficient of E_jk.
    const Eigen::MatrixXcd& coeffs() const noexcept { return coeffs_; }
    Eigen::MatrixXcd& coeffs() noexcept { return coeffs_; }

    /// True when all coefficients with j or k >= K - margin vanish.
    bool interior_supported(int margin) const;

    L2Vector& operator+=(const L2Vector& other);
    L2Vector& operator-=(const L2Vector& other);
    L2Vector& operator*=(cplx c);

    friend L2Vector operator+(L2Vector a, const L2Vector& b) { return a += b; }
    friend L2Vector operator-(L2Vector a, const L2Vector& b) { return a -= b; }
    friend L2Vector operator*(cplx c, L2Vector a) { return a *= c; }

private:
    L2Space space_;
    Eigen::MatrixXcd coeffs_;
};

struct IntegralResult {
    cplx value;
    /// Upper bound on the modulus of the omitted terms k >= K.
    double tail_bound = 0.0;
};

/// (1-q) sum_k f_0(q^k) q^{alpha k}; only the degree-0 coefficient contributes.
/// Throws DivergenceError when the weighted terms do not decay.
IntegralResult integrate(const DiscElement& f, double alpha);

cplx inner(const L2Vector& f, const L2Vector& g);
double norm(const L2Vector& f);

/// x f, truncated to j, k < K.
L2Vector lmul(const DiscElement& x, const L2Vector& v);
/// f x, truncated to j, k < K.
L2Vector rmul(const DiscElement& x, const L2Vector& v);

/// The finitely supported element with the same matrix coefficients.
DiscElement to_element(const L2Vector& v);
/// Matrix coefficients of an element on the truncated basis.
L2Vector to_vector(const L2Space& space, const DiscElement& x);

}  // namespace qdirac
