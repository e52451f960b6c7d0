#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qdirac/l2_space.hpp"
#include "qdirac/qdisc.hpp"

namespace qdirac {

using SparseOp = Eigen::SparseMatrix<cplx>;

/// L2(D_q, mu_alpha) (x) L2(S^1) truncated to matrix units E_jk (j, k < K) and
/// circle modes e^{imt} with |m| <= M. Vectors are coefficient arrays in the
/// (non-normalized) basis E_jk (x) e^{imt}.
class TruncatedSpace {
public:
    struct Site {
        int m;
        int j;
        int k;
    };

    TruncatedSpace(double q, double alpha, int size, int modes);

    double q() const noexcept { return l2_.q(); }
    double alpha() const noexcept { return l2_.alpha(); }
    int size() const noexcept { return l2_.size(); }
    int modes() const noexcept { return modes_; }
    const DiscGrid& grid() const noexcept { return l2_.grid(); }
    const L2Space& l2() const noexcept { return l2_; }

    long dimension() const noexcept;
    long index(int m, int j, int k) const noexcept;
    bool contains(int m, int j, int k) const noexcept;
    Site site(long i) const noexcept;
    /// Conserved grade (j - k) - m.
    int grade(long i) const noexcept;
    /// <b_i, b_i> for the basis vector b_i.
    double weight(long i) const;
    /// sqrt of the weights; maps coefficients to orthonormal coordinates.
    Eigen::VectorXd sqrt_weights() const;
    /// j, k < K - margin and |m| <= M - mode_margin.
    bool interior(long i, int margin, int mode_margin) const noexcept;

    TruncatedSpace padded(int pad, int mode_pad) const;

    friend bool operator==(const TruncatedSpace&, const TruncatedSpace&) = default;

private:
    L2Space l2_;
    int modes_;
};

/// Weighted inner product of coefficient vectors.
cplx inner(const TruncatedSpace& space, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g);

/// W^{1/2} A W^{-1/2}: the operator in the orthonormal basis.
SparseOp to_orthonormal(const TruncatedSpace& space, const SparseOp& a);

/// Restriction P A P^T of an operator on `outer` to the sites shared with `inner`.
SparseOp compress(const SparseOp& a, const TruncatedSpace& outer, const TruncatedSpace& inner);
Eigen::VectorXcd restrict_vector(const Eigen::VectorXcd& v, const TruncatedSpace& outer, const TruncatedSpace& inner);
Eigen::VectorXcd embed_vector(const Eigen::VectorXcd& v, const TruncatedSpace& inner, const TruncatedSpace& outer);

/// [[a, b], [c, d]] on the doubled (spinor) space.
SparseOp block2x2(const SparseOp& a, const SparseOp& b, const SparseOp& c, const SparseOp& d);

/// Elementary operators on a truncated space. Truncation acts on every
/// factor, so composing them is exact only away from the edge; build on a
/// padded space and compress to read exact matrix elements.
class OperatorAlgebra {
public:
    explicit OperatorAlgebra(TruncatedSpace space);

    const TruncatedSpace& space() const noexcept { return space_; }

    SparseOp identity() const;
    /// psi -> x psi
    SparseOp left(const DiscElement& x) const;
    /// psi -> psi x  (the opposite-algebra action x^op)
    SparseOp right(const DiscElement& x) const;
    /// Multiplication by e^{ist}.
    SparseOp mode_shift(int s) const;
    /// d/dt: e^{imt} -> i m e^{imt}
    SparseOp dt() const;

private:
    TruncatedSpace space_;
};

}  // namespace qdirac
