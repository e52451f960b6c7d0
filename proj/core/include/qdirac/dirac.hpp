#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdirac/calculus.hpp"
#include "qdirac/field_space.hpp"
#include "qdirac/su2q.hpp"

namespace qdirac {

/// Parameters of the twisted Dirac operator
///
///     D = [[H - shift, c E], [c F, -H - shift]]
///
/// Twist 1 uses the sigma^1-twisted H, E, F on the alpha = 2 space; twist 2
/// uses the sigma^2-twisted H_1, E_1, F_1 on the alpha = 1 space.
struct DiracConfig {
    double q = 0.5;
    int twist = 1;
    /// Defaults to the value paired with the twist (2 for twist 1, 1 for twist 2).
    std::optional<double> alpha;
    double c = 1.0;
    /// gamma_q of twist 2; defaults to q / (1 + q).
    std::optional<double> gamma;
    int K = 16;
    int M = 4;
    /// Diagonal constant subtracted from both spinor blocks.
    double shift = 2.0;

    double alpha_value() const;
    double gamma_value() const;
    /// Twist exponent w of the automorphism sigma^w.
    int sigma_exponent() const noexcept { return twist; }
    /// Throws ParameterError on invalid values or a twist/alpha mismatch.
    void validate() const;

    TruncatedSpace space() const;
    DiracConfig with_size(int k, int m) const;
};

/// First-order terms of H, E and F for the configured twist.
struct OperatorTable {
    std::vector<OperatorTerm> H;
    std::vector<OperatorTerm> E;
    std::vector<OperatorTerm> F;
};

OperatorTable operator_table(const DiracConfig& config);

/// psi -> scalar * e^{i shift t} * left * psi * right
struct TwoSidedTerm {
    cplx scalar;
    SU2Element left;
    DiscElement right;
    int mode_shift = 0;
};

enum class Reading { collapsed, two_sided };

const char* name(Reading reading) noexcept;

/// H(phi), E(phi), F(phi) as elements of the algebra.
struct HEFElements {
    SU2Element H;
    SU2Element E;
    SU2Element F;
};

/// H(phi), E(phi), F(phi) as two-sided multiplication operators, i.e. the
/// twisted commutators [H, phi], [E, phi], [F, phi].
struct HEFTwoSided {
    std::vector<TwoSidedTerm> H;
    std::vector<TwoSidedTerm> E;
    std::vector<TwoSidedTerm> F;
};

HEFElements apply_hef_collapsed(const SU2Element& phi, const DiracConfig& config);
HEFTwoSided apply_hef_two_sided(const SU2Element& phi, const DiracConfig& config);

SparseOp two_sided_matrix(const std::vector<TwoSidedTerm>& terms, const OperatorAlgebra& algebra);

/// H, E, F on the algebra's space, before compression.
struct DiracComponents {
    SparseOp H;
    SparseOp E;
    SparseOp F;
};

DiracComponents assemble_components(const DiracConfig& config, const OperatorAlgebra& algebra);
/// D on the algebra's space, before compression.
SparseOp assemble_dirac_on(const DiracConfig& config, const OperatorAlgebra& algebra);

/// Index padding that makes compressed products of the operators exact.
inline constexpr int kIndexPad = 6;
inline constexpr int kModePad = 4;

/// D on the doubled space (spinor block 0 then 1) with exact matrix elements
/// on the K x M truncation.
struct DiracMatrix {
    DiracConfig config;
    TruncatedSpace space;
    SparseOp matrix;

    long dimension() const noexcept { return 2 * space.dimension(); }
    int grade(long i) const noexcept { return space.grade(i % space.dimension()); }
    double weight(long i) const { return space.weight(i % space.dimension()); }
    /// Doubled-space indices grouped by grade, ascending within each grade.
    std::map<int, std::vector<long>> blocks() const;
};

DiracMatrix assemble_dirac(const DiracConfig& config);

/// Largest matrix entry connecting two different grades; exactly 0 when the grading holds.
double cross_grade_max(const DiracMatrix& d);
/// Number of nonzero entries connecting different grades.
long cross_grade_count(const DiracMatrix& d);

/// One adjoint relation <L f, g> = <f, R g>, tested on random interior pairs.
struct AdjointCheck {
    std::string name;
    double alpha = 0.0;
    int pairs = 0;
    /// Worst |<Lf,g> - <f,Rg>| with scale ||Lf|| ||g|| + ||f|| ||Rg||.
    Residual residual;
};

struct AdjointOptions {
    int pairs = 100;
    std::uint64_t seed = 1;
    int margin = 4;
};

/// The adjoint inclusions behind the symmetry of D for the configured twist,
/// including the symmetry of H and the E/F adjoint pair.
std::vector<AdjointCheck> adjoint_residuals(const DiracConfig& config, const AdjointOptions& options);

/// Symmetry <D psi, phi> = <psi, D phi> of the assembled operator on random interior spinors.
AdjointCheck symmetry_residual(const DiracConfig& config, const AdjointOptions& options);

/// Twisted commutator [D, pi(phi)]_sigma = D pi(phi) - pi(sigma^w(phi)) D, computed by
/// composition and from the two-sided terms plus the constant-shift correction
/// -shift (phi - sigma^w(phi)) on both diagonal blocks.
struct CommutatorCheck {
    SparseOp composed;
    SparseOp two_sided;
    /// Difference on interior columns, scaled by the largest entry of D pi(phi) or pi(sigma(phi)) D there.
    Residual residual;
};

CommutatorCheck twisted_commutator(const DiracConfig& config, const SU2Builder& phi, int word_length, int margin);

/// Orthonormal-basis comparison of D (twist 1, alpha 2) with D_1 (twist 2, alpha 1)
/// through the unitary psi -> psi y^{1/2} between the two spaces.
struct GaugeReport {
    double relative_difference = 0.0;
    double norm_d = 0.0;
    double norm_d1 = 0.0;
};

GaugeReport gauge_comparison(const DiracConfig& config);

}  // namespace qdirac
