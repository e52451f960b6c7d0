#pragma once

#include <cstdint>

#include "qdirac/field_space.hpp"

namespace qdirac {

struct NormEstimate {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Largest singular value of `a` by power iteration on a^H a, started from a
/// seeded pseudo-random vector. Converged when successive estimates agree to `tolerance`.
NormEstimate operator_norm(const SparseOp& a, std::uint64_t seed = 1, int max_iterations = 2000,
                           double tolerance = 1e-10);

}  // namespace qdirac
