#include "qdirac/operator_norm.hpp"

#include <cmath>
#include <random>

namespace qdirac {

NormEstimate operator_norm(const SparseOp& a, std::uint64_t seed, int max_iterations, double tolerance) {
    NormEstimate out;
    if (a.cols() == 0 || a.nonZeros() == 0) {
        out.converged = true;
        return out;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXcd v(a.cols());
    for (auto& x : v) x = cplx(normal(rng), normal(rng));
    v.normalize();

    const SparseOp ah = a.adjoint();
    double previous = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        const Eigen::VectorXcd av = a * v;
        const double estimate = av.norm();
        out.value = estimate;
        out.iterations = it;
        if (estimate == 0.0) {
            out.converged = true;
            return out;
        }
        if (it > 1 && std::abs(estimate - previous) <= tolerance * estimate) {
            out.converged = true;
            return out;
        }
        previous = estimate;
        v = ah * av;
        v.normalize();
    }
    return out;
}

}  // namespace qdirac
