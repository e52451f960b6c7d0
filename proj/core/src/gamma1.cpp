#include "qdirac/gamma1.hpp"

#include <algorithm>
#include <cmath>

#include "qdirac/operator_norm.hpp"
#include "qdirac/parallel.hpp"

namespace qdirac {

const char* name(Growth growth) noexcept {
    switch (growth) {
        case Growth::zero: return "zero";
        case Growth::bounded: return "bounded";
        case Growth::growing: return "growing";
        case Growth::inconclusive: return "inconclusive";
    }
    return "?";
}

GrowthFit fit_growth(const std::vector<int>& sizes, const std::vector<double>& norms, double q) {
    GrowthFit fit;
    if (std::all_of(norms.begin(), norms.end(), [](double v) { return v < 1e-12; })) {
        fit.growth = Growth::zero;
        return fit;
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < sizes.size() && i < norms.size(); ++i) {
        if (norms[i] <= 0.0) continue;
        xs.push_back(sizes[i]);
        ys.push_back(std::log(norms[i]));
    }
    if (xs.size() < 2) return fit;
    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0.0) return fit;
    fit.slope = sxy / sxx;
    const double unit = std::abs(std::log(q));
    if (fit.slope <= 0.05 * unit) {
        fit.growth = Growth::bounded;
    } else if (fit.slope >= 0.25 * unit) {
        fit.growth = Growth::growing;
    }
    return fit;
}

int element_span(const SU2Element& phi) {
    int span = 0;
    for (const auto& [m, x] : phi.parts()) span = std::max({span, std::abs(m), x.max_shift()});
    return span;
}

double orthonormal_norm(const SparseOp& a, const TruncatedSpace& space, std::uint64_t seed) {
    const Eigen::VectorXd w = space.sqrt_weights();
    const long n = space.dimension();
    SparseOp b = a;
    for (int c = 0; c < b.outerSize(); ++c)
        for (SparseOp::InnerIterator it(b, c); it; ++it) it.valueRef() *= w[it.row() % n] / w[c % n];
    return operator_norm(b, seed).value;
}

namespace {

struct Slot {
    std::string name;
    Reading reading;
};

std::vector<Slot> slots() {
    std::vector<Slot> out;
    for (Reading r : {Reading::collapsed, Reading::two_sided})
        for (const char* arg : {"phi", "phi*"})
            for (const char* op : {"H", "E", "F"}) out.push_back({std::string(op) + "(" + arg + ")", r});
    out.push_back({"[D,phi]", Reading::two_sided});
    out.push_back({"[D,phi*]", Reading::two_sided});
    return out;
}

struct PerK {
    std::vector<double> norms;
    Residual oracle;
};

PerK measure(const DiracConfig& config, const SU2Builder& phi, int margin) {
    const TruncatedSpace inner = config.space();
    const SU2Builder phi_star = [phi](const DiscGrid& g) { return star(phi(g)); };
    const int span = std::max(1, element_span(phi(inner.grid())));
    const TruncatedSpace outer = inner.padded(span + 3, span + 2);
    const OperatorAlgebra algebra(outer);

    PerK out;
    for (const SU2Builder& b : {phi, phi_star}) {
        const HEFElements e = apply_hef_collapsed(b(outer.grid()), config);
        for (const SU2Element* x : {&e.H, &e.E, &e.F})
            out.norms.push_back(orthonormal_norm(compress(left_action(*x, algebra), outer, inner), inner));
    }
    for (const SU2Builder& b : {phi, phi_star}) {
        const HEFTwoSided t = apply_hef_two_sided(b(outer.grid()), config);
        for (const auto* x : {&t.H, &t.E, &t.F})
            out.norms.push_back(orthonormal_norm(compress(two_sided_matrix(*x, algebra), outer, inner), inner));
    }
    for (int i = 0; i < 2; ++i) {
        const CommutatorCheck c = twisted_commutator(config, i == 0 ? phi : phi_star, span, margin);
        out.norms.push_back(orthonormal_norm(c.composed, inner));
        if (i == 0) out.oracle = c.residual;
    }
    return out;
}

}  // namespace

Gamma1Report gamma1_report(const DiracConfig& config, const SU2Builder& phi, const std::vector<int>& sweep,
                           int margin) {
    config.validate();
    std::vector<PerK> per_k(sweep.size());
    parallel_for(sweep.size(), [&](std::size_t i) {
        per_k[i] = measure(config.with_size(sweep[i], config.M), phi, margin);
    });

    Gamma1Report report;
    report.sweep = sweep;
    const std::vector<Slot> names = slots();
    for (std::size_t s = 0; s < names.size(); ++s) {
        NormSeries series{names[s].name, names[s].reading, {}, {}};
        for (const PerK& p : per_k) series.norms.push_back(p.norms[s]);
        series.fit = fit_growth(sweep, series.norms, config.q);
        report.series.push_back(std::move(series));
    }
    for (const PerK& p : per_k) report.oracle.push_back(p.oracle);
    return report;
}

}  // namespace qdirac
