#pragma once

#include <string>
#include <vector>

#include "qdirac/dirac.hpp"

namespace qdirac {

enum class Growth { zero, bounded, growing, inconclusive };

const char* name(Growth growth) noexcept;

/// Least-squares slope of log(norm) against K, classified relative to |ln q|:
/// bounded below 0.05 |ln q|, growing above 0.25 |ln q|.
struct GrowthFit {
    double slope = 0.0;
    Growth growth = Growth::inconclusive;
};

GrowthFit fit_growth(const std::vector<int>& sizes, const std::vector<double>& norms, double q);

struct NormSeries {
    /// e.g. "H(phi)", "F(phi*)", "[D,phi]"
    std::string name;
    Reading reading = Reading::collapsed;
    std::vector<double> norms;
    GrowthFit fit;
};

struct Gamma1Report {
    std::vector<int> sweep;
    std::vector<NormSeries> series;
    /// Oracle residual of the twisted commutator of phi at each K.
    std::vector<Residual> oracle;
};

/// Largest |degree| or |mode| of phi; sets the padding of exact assemblies.
int element_span(const SU2Element& phi);

/// Operator norm in the orthonormal basis of the truncation of `a` to `space`
/// (one or two spinor blocks).
double orthonormal_norm(const SparseOp& a, const TruncatedSpace& space, std::uint64_t seed = 1);

/// Norm sequences of H, E, F applied to phi and phi* under both readings and of the
/// twisted commutator [D, pi(phi)], across the K sweep at fixed M. Measures growth; it
/// never decides membership. Throws DomainError when phi leaves a derivation's domain.
Gamma1Report gamma1_report(const DiracConfig& config, const SU2Builder& phi, const std::vector<int>& sweep,
                           int margin = 4);

}  // namespace qdirac
