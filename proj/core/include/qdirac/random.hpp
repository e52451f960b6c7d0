#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "qdirac/field_space.hpp"
#include "qdirac/qdisc.hpp"
#include "qdirac/su2q.hpp"

namespace qdirac {

/// Generator for job `job` of a run seeded with `seed`. Draws depend only on
/// (seed, job), so parallel execution order cannot change them.
std::mt19937_64 job_rng(std::uint64_t seed, std::uint64_t job);

/// Random finitely supported element: degrees |n| <= max_degree, coefficient
/// tables supported on k < support with standard complex normal entries.
DiscElement random_f0(const DiscGrid& grid, std::mt19937_64& rng, int max_degree, int support);

/// Random element of the form sum over |m| <= max_mode of random_f0 (x) e^{imt}.
SU2Element random_su2_f0(const DiscGrid& grid, std::mt19937_64& rng, int max_degree, int support, int max_mode);

/// Random coefficient vector on `blocks` copies of the space, supported on
/// interior sites, with standard complex normal orthonormal-basis coordinates.
Eigen::VectorXcd random_interior_vector(const TruncatedSpace& space, int blocks, int margin, int mode_margin,
                                        std::mt19937_64& rng);

}  // namespace qdirac
