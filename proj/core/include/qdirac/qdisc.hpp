#pragma once

#include <cmath>
#include <complex>
#include <map>

#include <Eigen/Dense>

#include "qdirac/circle.hpp"
#include "qdirac/grid_function.hpp"

namespace qdirac {

/// Deformation parameter q in (0,1) together with the grid size K.
class DiscGrid {
public:
    DiscGrid(double q, int size);

    double q() const noexcept { return q_; }
    int size() const noexcept { return size_; }
    /// q^exponent
    double power(double exponent) const { return std::pow(q_, exponent); }

    friend bool operator==(const DiscGrid&, const DiscGrid&) = default;

private:
    double q_;
    int size_;
};

/// Element of the quantum disc algebra in normal form
///
///     sum_{n >= 0} s^n f_n(y) + sum_{n >= 1} f_{-n}(y) s*^n,
///
/// with each coefficient f_n tabulated on the grid {q^k : k < K}. The term of
/// degree n acts on the basis of l2(N) by moving e_k to e_{k+n}; its matrix
/// entry (j, k) with j - k = n is f_n(q^{min(j,k)}).
class DiscElement {
public:
    explicit DiscElement(DiscGrid grid);

    const DiscGrid& grid() const noexcept { return grid_; }
    double q() const noexcept { return grid_.q(); }
    int size() const noexcept { return grid_.size(); }

    const std::map<int, GridFunction>& terms() const noexcept { return terms_; }
    /// Coefficient table of the given degree, or nullptr when absent.
    const GridFunction* term(int degree) const;
    void set_term(int degree, GridFunction f);
    /// Adds f to the coefficient of the given degree, dropping it if it cancels.
    void add_term(int degree, const GridFunction& f);

    /// Number of leading grid indices whose table entries are exact. Reading a
    /// table past the grid, where it has not reached its limit, substitutes the
    /// limit and lowers this below K.
    int exact_extent() const noexcept { return exact_extent_; }
    void limit_exact_extent(int extent) noexcept { exact_extent_ = extent < exact_extent_ ? extent : exact_extent_; }
    /// True once any entry is inexact (the approximation flag).
    bool approximate() const noexcept { return exact_extent_ < grid_.size(); }
    void mark_approximate() noexcept { limit_exact_extent(grid_.size() - 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// All coefficient functions have finite limits at 0.
    bool is_bounded() const noexcept;
    /// Largest |n| over the present degrees.
    int max_shift() const noexcept;

    /// Matrix element <e_row, a e_col> of the operator on l2(N).
    cplx entry(int row, int col) const;

    DiscElement& operator+=(const DiscElement& other);
    DiscElement& operator-=(const DiscElement& other);
    DiscElement& operator*=(cplx c);

    friend DiscElement operator+(DiscElement a, const DiscElement& b) { return a += b; }
    friend DiscElement operator-(DiscElement a, const DiscElement& b) { return a -= b; }
    friend DiscElement operator-(DiscElement a) { return a *= -1.0; }
    friend DiscElement operator*(cplx c, DiscElement a) { return a *= c; }
    friend DiscElement operator*(DiscElement a, cplx c) { return a *= c; }
    friend DiscElement operator*(const DiscElement& a, const DiscElement& b);

private:
    DiscGrid grid_;
    std::map<int, GridFunction> terms_;
    int exact_extent_;
};

/// Generators of the algebra, each returned in normal form.
struct Generator {
    enum class Kind { one, z, z_star, y, y_pow, s, s_star, indicator };

    Kind kind = Kind::one;
    double exponent = 1.0;  // y_pow
    int index = 0;          // indicator

    static Generator one() { return {Kind::one}; }
    static Generator z() { return {Kind::z}; }
    static Generator z_star() { return {Kind::z_star}; }
    static Generator y() { return {Kind::y}; }
    static Generator y_pow(double beta) { return {Kind::y_pow, beta, 0}; }
    static Generator s() { return {Kind::s}; }
    static Generator s_star() { return {Kind::s_star}; }
    static Generator indicator(int k) { return {Kind::indicator, 1.0, k}; }
};

DiscElement make_generator(const Generator& g, const DiscGrid& grid);

/// Shorthands for make_generator.
namespace disc {
DiscElement one(const DiscGrid& grid);
DiscElement z(const DiscGrid& grid);
DiscElement z_star(const DiscGrid& grid);
DiscElement y(const DiscGrid& grid);
DiscElement y_pow(const DiscGrid& grid, double beta);
DiscElement s(const DiscGrid& grid);
DiscElement s_star(const DiscGrid& grid);
DiscElement indicator(const DiscGrid& grid, int k);
}  // namespace disc

/// Normal-ordered product. Uses s*s = 1 and ss* = 1 - indicator(0).
DiscElement mul(const DiscElement& a, const DiscElement& b);

/// Involution; degree n maps to -n with conjugated table.
DiscElement star(const DiscElement& a);

/// Scaling automorphism: s -> q^{-alpha} s, s* -> q^{alpha} s*, f(y) fixed.
DiscElement sigma(const DiscElement& a, double alpha);

/// Truncated matrix on e_0, ..., e_{n-1}; n defaults to the grid size.
Eigen::MatrixXcd to_matrix(const DiscElement& a);
Eigen::MatrixXcd to_matrix(const DiscElement& a, int n);

/// Boundary symbol: degree n contributes f_n(0) at circle mode n.
/// Throws UnboundedSymbolError when some coefficient has no finite limit.
CircleElement symbol(const DiscElement& a);

/// max over degrees and grid indices k < extent of |a_n(q^k) - b_n(q^k)|,
/// plus the difference of limits where both are known.
double max_abs_difference(const DiscElement& a, const DiscElement& b, int extent);
/// Same, over the indices where both elements are exact.
double max_abs_difference(const DiscElement& a, const DiscElement& b);

/// Largest |f_n(q^k)| over all degrees and k < extent.
double max_abs_value(const DiscElement& a, int extent);

}  // namespace qdirac
