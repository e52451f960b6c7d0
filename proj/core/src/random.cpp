#include "qdirac/random.hpp"

#include <algorithm>
#include <cmath>

namespace qdirac {

std::mt19937_64 job_rng(std::uint64_t seed, std::uint64_t job) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(job), static_cast<std::uint32_t>(job >> 32)};
    return std::mt19937_64(seq);
}

DiscElement random_f0(const DiscGrid& grid, std::mt19937_64& rng, int max_degree, int support) {
    std::normal_distribution<double> normal;
    DiscElement out(grid);
    const int n = grid.size();
    for (int d = -max_degree; d <= max_degree; ++d) {
        std::vector<cplx> table(static_cast<std::size_t>(n));
        for (int k = 0; k < std::min(support, n); ++k) table[static_cast<std::size_t>(k)] = cplx(normal(rng), normal(rng));
        out.set_term(d, GridFunction::with_limit(0.0, std::move(table)));
    }
    return out;
}

SU2Element random_su2_f0(const DiscGrid& grid, std::mt19937_64& rng, int max_degree, int support, int max_mode) {
    SU2Element out(grid);
    for (int m = -max_mode; m <= max_mode; ++m) out.add(m, random_f0(grid, rng, max_degree, support));
    return out;
}

Eigen::VectorXcd random_interior_vector(const TruncatedSpace& space, int blocks, int margin, int mode_margin,
                                        std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    const long n = space.dimension();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(blocks * n);
    for (long b = 0; b < blocks; ++b)
        for (long i = 0; i < n; ++i) {
            if (!space.interior(i, margin, mode_margin)) continue;
            v[b * n + i] = cplx(normal(rng), normal(rng)) / std::sqrt(space.weight(i));
        }
    return v;
}

}  // namespace qdirac
