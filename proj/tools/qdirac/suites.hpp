#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace qdirac::cli {

inline constexpr double kAlgebraTolerance = 1e-12;
inline constexpr double kOperatorTolerance = 1e-10;

struct Check {
    std::string name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

Check make_check(std::string name, double residual, double threshold);

/// Disc relations, symbol map, SU_q(2) relations under rho_tilde, *-property, integral closed form.
std::vector<Check> algebra_suite(const RunConfig& config);
/// Closed-form derivatives, twisted Leibniz rules, twisted commutators of single operator terms.
std::vector<Check> calculus_suite(const RunConfig& config);
/// Adjoint inclusions for the configured twist.
std::vector<Check> adjoints_suite(const RunConfig& config);
/// Grade conservation, symmetry, commutator oracle, collapsed closed forms.
std::vector<Check> dirac_suite(const RunConfig& config);

std::vector<Check> run_suite(const std::string& suite, const RunConfig& config);

/// Random products of length 1..3 in the atoms admissible for the twist, as expression text.
std::vector<std::string> random_words(int twist, int count, std::uint64_t seed);

/// max over interior columns of |sum_t coeff_t rho(x_t1) ... rho(x_tn)| on `space`,
/// with each rho built on a padded space and the products taken before compression.
struct RelationTerm {
    cplx coefficient;
    std::vector<SU2Builder> factors;
};
double relation_residual(const std::vector<RelationTerm>& terms, const TruncatedSpace& space, int margin);

}  // namespace qdirac::cli
