#pragma once

#include <string>
#include <vector>

#include "qdirac/field_space.hpp"
#include "qdirac/qdisc.hpp"
#include "qdirac/su2q.hpp"

namespace qdirac {

/// The quantised partial derivatives and their y-rescaled versions:
///
///     d_z(f)    = -1/(1-q^2) y^{-2} [z*, f]      T1 = y d_z
///     d_zbar(f) =  1/(1-q^2) y^{-2} [z,  f]      T2 = y d_zbar
enum class Derivation { d_z, d_zbar, T1, T2 };

const char* name(Derivation kind) noexcept;
/// Exponent w of the automorphism sigma^w in the twisted Leibniz rule.
int twist_of(Derivation kind) noexcept;

/// Applies the derivation in normal form. Throws DomainError when a
/// coefficient table of the result grows geometrically toward the grid edge.
DiscElement apply(Derivation kind, const DiscElement& f);
/// Mode-wise application.
SU2Element apply(Derivation kind, const SU2Element& f);

/// Growth test used by apply(); throws DomainError naming `operation`.
void check_domain(const DiscElement& x, const std::string& operation);

/// Residual of an identity, with the magnitude of the terms it compares.
struct Residual {
    double absolute = 0.0;
    double scale = 0.0;
    /// absolute / max(1, scale)
    double relative() const noexcept { return absolute / (scale > 1.0 ? scale : 1.0); }
};

Residual combine(const Residual& a, const Residual& b) noexcept;

/// || D(fg) - D(f) g - sigma^w(f) D(g) || over matrix entries j, k < K - margin.
Residual leibniz_residual(Derivation kind, const DiscElement& f, const DiscElement& g, int margin);

/// y^{-kind} d/dt applied mode-wise; kind 1 is T0, kind 2 is S0.
SU2Element t0_apply(const SU2Element& f, int kind);
/// Twisted Leibniz residual of t0_apply with sigma^kind.
Residual t0_leibniz_residual(int kind, const SU2Element& f, const SU2Element& g, int margin);

/// Product of generators, evaluated on a requested grid.
struct Word {
    std::vector<Generator> factors;

    DiscElement evaluate(const DiscGrid& grid) const;
    std::string to_string() const;
};

/// Differential part of a first-order operator term.
enum class OperatorKind { T1, T2, d_z, d_zbar, T0, S0, inv_y2 };

const char* name(OperatorKind kind) noexcept;
int twist_of(OperatorKind kind) noexcept;

/// psi -> scalar * e^{i shift t} * (D psi) * x  with D of the given kind.
struct OperatorTerm {
    cplx scalar;
    OperatorKind kind;
    Word right;
    int mode_shift = 0;
};

/// D(f) for the differential part alone; inv_y2 is left multiplication by y^{-2}.
SU2Element apply_kind(OperatorKind kind, const SU2Element& f);
/// The term applied to f inside the algebra: scalar * e^{i shift t} D(f) x.
SU2Element apply_term(const OperatorTerm& term, const SU2Element& f);

/// Matrix of the differential part on the algebra's space.
SparseOp kind_matrix(OperatorKind kind, const OperatorAlgebra& algebra);
SparseOp term_matrix(const OperatorTerm& term, const OperatorAlgebra& algebra);

/// Two evaluations of the twisted commutator [x^op T, f]_sigma psi: by
/// composing operator matrices, and by the closed form (T f) psi x.
struct TermCommutatorResult {
    Eigen::VectorXcd composed;
    Eigen::VectorXcd closed_form;
    Residual residual;
};

/// psi lives on `space`; operators are built on a padded copy and compressed.
TermCommutatorResult term_commutator(const OperatorTerm& term, const SU2Builder& f, const Eigen::VectorXcd& psi,
                               const TruncatedSpace& space, int pad, int mode_pad);

}  // namespace qdirac
