#include "qdirac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qdirac/errors.hpp"
#include "qdirac/parallel.hpp"

namespace qdirac {

namespace {

struct BlockResult {
    std::vector<double> values;
    double max_abs_imag = 0.0;
    double defect = 0.0;
};

Eigen::MatrixXcd orthonormal_block(const DiracMatrix& d, const std::vector<long>& idx) {
    const long n = static_cast<long>(idx.size());
    std::map<long, long> position;
    for (long i = 0; i < n; ++i) position[idx[static_cast<std::size_t>(i)]] = i;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (long c = 0; c < n; ++c) {
        const long col = idx[static_cast<std::size_t>(c)];
        for (SparseOp::InnerIterator it(d.matrix, col); it; ++it) {
            auto p = position.find(it.row());
            if (p == position.end()) continue;
            a(p->second, c) = it.value() * std::sqrt(d.weight(it.row()) / d.weight(col));
        }
    }
    return a;
}

BlockResult solve_block(const DiracMatrix& d, const std::vector<long>& idx) {
    BlockResult out;
    if (idx.empty()) return out;
    const Eigen::MatrixXcd a = orthonormal_block(d, idx);
    const Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
    out.defect = ((a - a.adjoint()) / 2.0).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw Error("spectrum: eigensolver did not converge");
    // Rayleigh quotients of the returned eigenvectors measure how real the spectrum is.
    const Eigen::MatrixXcd v = solver.eigenvectors();
    const Eigen::VectorXcd rq = (v.adjoint() * h * v).diagonal();
    out.max_abs_imag = rq.imag().cwiseAbs().maxCoeff();
    out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

std::vector<int> selected_grades(const std::map<int, std::vector<long>>& blocks, const SpectrumOptions& options) {
    std::vector<int> out;
    for (const auto& kv : blocks)
        if (!options.grade || *options.grade == kv.first) out.push_back(kv.first);
    return out;
}

void check_caps(const std::map<int, std::vector<long>>& blocks, const std::vector<int>& grades, long cap) {
    for (int g : grades) {
        const long n = static_cast<long>(blocks.at(g).size());
        if (n > cap) {
            std::ostringstream msg;
            msg << "spectrum: grade " << g << " block has dimension " << n << " above the cap " << cap
                << "; restrict to a single grade with smaller |g| or reduce K and M";
            throw SizeError(msg.str(), n, cap);
        }
    }
}

}  // namespace

std::vector<std::pair<int, long>> grade_block_sizes(const DiracConfig& config) {
    const TruncatedSpace s = config.space();
    std::map<int, long> counts;
    for (long i = 0; i < s.dimension(); ++i) counts[s.grade(i)] += 2;
    return {counts.begin(), counts.end()};
}

SpectrumReport spectrum(const DiracConfig& config, const SpectrumOptions& options) {
    config.validate();
    if (options.count && *options.count < 0) throw ParameterError("spectrum: count must be non-negative");
    if (options.delta_step < 0) throw ParameterError("spectrum: delta_step must be non-negative");

    const DiracMatrix d = assemble_dirac(config);
    const auto blocks = d.blocks();
    const std::vector<int> grades = selected_grades(blocks, options);
    if (options.grade && grades.empty()) {
        throw ParameterError("spectrum: grade " + std::to_string(*options.grade) + " has no basis vectors");
    }
    check_caps(blocks, grades, options.dimension_cap);

    std::optional<DiracMatrix> wide;
    std::map<int, std::vector<long>> wide_blocks;
    if (options.delta_step > 0) {
        wide = assemble_dirac(config.with_size(config.K + options.delta_step, config.M));
        wide_blocks = wide->blocks();
        check_caps(wide_blocks, grades, options.dimension_cap);
    }

    std::vector<BlockResult> base(grades.size());
    std::vector<BlockResult> ref(grades.size());
    parallel_for(grades.size(), [&](std::size_t i) {
        base[i] = solve_block(d, blocks.at(grades[i]));
        if (wide) ref[i] = solve_block(*wide, wide_blocks[grades[i]]);
    });

    SpectrumReport report;
    for (std::size_t i = 0; i < grades.size(); ++i) {
        report.max_abs_imag = std::max(report.max_abs_imag, base[i].max_abs_imag);
        report.hermiticity_defect = std::max(report.hermiticity_defect, base[i].defect);
        std::vector<double> vals = base[i].values;
        if (options.count && static_cast<std::size_t>(*options.count) < vals.size()) {
            std::stable_sort(vals.begin(), vals.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
            vals.resize(static_cast<std::size_t>(*options.count));
        }
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 0; k < vals.size(); ++k) {
            double delta = std::numeric_limits<double>::quiet_NaN();
            if (wide && !ref[i].values.empty()) {
                delta = std::numeric_limits<double>::infinity();
                for (double r : ref[i].values) delta = std::min(delta, std::abs(r - vals[k]));
            }
            report.values.push_back({grades[i], static_cast<int>(k), vals[k], delta});
        }
    }
    std::stable_sort(report.values.begin(), report.values.end(), [](const Eigenpair& x, const Eigenpair& y) {
        if (x.value != y.value) return x.value < y.value;
        return x.grade < y.grade;
    });
    return report;
}

}  // namespace qdirac
