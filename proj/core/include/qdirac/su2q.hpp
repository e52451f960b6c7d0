#pragma once

#include <functional>
#include <map>

#include "qdirac/field_space.hpp"
#include "qdirac/qdisc.hpp"

namespace qdirac {

/// Finite sum  sum_m x_m (x) e^{imt}  of disc elements tensored with circle modes.
class SU2Element {
public:
    explicit SU2Element(DiscGrid grid);
    static SU2Element from_disc(const DiscElement& x, int mode = 0);

    const DiscGrid& grid() const noexcept { return grid_; }
    int size() const noexcept { return grid_.size(); }
    double q() const noexcept { return grid_.q(); }

    const std::map<int, DiscElement>& parts() const noexcept { return parts_; }
    /// Disc coefficient of the given mode, or nullptr.
    const DiscElement* part(int mode) const;
    void add(int mode, const DiscElement& x);

    bool is_zero() const noexcept { return parts_.empty(); }
    bool approximate() const noexcept;
    /// Smallest exact extent over the parts.
    int exact_extent() const noexcept;
    bool is_bounded() const noexcept;

    /// Multiplies by e^{ist}.
    SU2Element shifted(int s) const;

    SU2Element& operator+=(const SU2Element& other);
    SU2Element& operator-=(const SU2Element& other);
    SU2Element& operator*=(cplx c);

    friend SU2Element operator+(SU2Element a, const SU2Element& b) { return a += b; }
    friend SU2Element operator-(SU2Element a, const SU2Element& b) { return a -= b; }
    friend SU2Element operator-(SU2Element a) { return a *= -1.0; }
    friend SU2Element operator*(cplx c, SU2Element a) { return a *= c; }
    friend SU2Element operator*(const SU2Element& a, const SU2Element& b);

private:
    DiscGrid grid_;
    std::map<int, DiscElement> parts_;
};

/// Builds an element on any grid; lets sweeps over K re-evaluate the same expression.
using SU2Builder = std::function<SU2Element(const DiscGrid&)>;

SU2Element mul(const SU2Element& a, const SU2Element& b);
SU2Element star(const SU2Element& a);
/// sigma^alpha on the disc factor; circle modes are untouched.
SU2Element sigma(const SU2Element& a, double alpha);
/// Right multiplication of every disc part by x.
SU2Element mul_right(const SU2Element& a, const DiscElement& x);

double max_abs_difference(const SU2Element& a, const SU2Element& b, int extent);
/// Same, over the indices where both elements are exact.
double max_abs_difference(const SU2Element& a, const SU2Element& b);

/// Generators a = z (x) 1 and c = y (x) e^{it}, and the circle unitary u = 1 (x) e^{it}.
namespace su2 {
SU2Element one(const DiscGrid& grid);
SU2Element a(const DiscGrid& grid);
SU2Element c(const DiscGrid& grid);
SU2Element u(const DiscGrid& grid);
}  // namespace su2

/// Left multiplication by x on the truncated field space (no boundedness check).
SparseOp left_action(const SU2Element& x, const OperatorAlgebra& algebra);

/// The multiplication representation; throws DomainError for unbounded x.
SparseOp rho_tilde(const SU2Element& x, const OperatorAlgebra& algebra);

}  // namespace qdirac
