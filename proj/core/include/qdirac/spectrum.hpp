#pragma once

#include <optional>
#include <vector>

#include "qdirac/dirac.hpp"

namespace qdirac {

struct SpectrumOptions {
    /// Restrict to one grade; all grades when empty.
    std::optional<int> grade;
    /// Eigenvalues of smallest magnitude kept per grade; all when empty.
    std::optional<int> count;
    /// Convergence deltas compare against a solve at K + delta_step (0 disables).
    int delta_step = 8;
    long dimension_cap = 6000;
};

struct Eigenpair {
    int grade = 0;
    /// Position within the grade, ascending by value.
    int index = 0;
    double value = 0.0;
    /// Distance to the nearest eigenvalue of the same grade at K + delta_step; NaN when not computed.
    double delta_K = 0.0;
};

struct SpectrumReport {
    std::vector<Eigenpair> values;
    /// Largest |Im| among the eigenvalues returned by the solver (0 for a Hermitian solve).
    double max_abs_imag = 0.0;
    /// Largest entry of (A - A^H)/2 in the orthonormal basis, before symmetrization.
    double hermiticity_defect = 0.0;
};

/// Eigenvalues of the orthonormal-basis block of D for each grade, symmetrized as (A + A^H)/2.
/// Sorted ascending by value, ties by grade. Throws SizeError if a block exceeds the cap.
SpectrumReport spectrum(const DiracConfig& config, const SpectrumOptions& options);

/// Dimension of every grade block of the doubled space, ascending by grade.
std::vector<std::pair<int, long>> grade_block_sizes(const DiracConfig& config);

}  // namespace qdirac
