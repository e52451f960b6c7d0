#include "qdirac/qdisc.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qdirac/errors.hpp"

namespace qdirac {

DiscGrid::DiscGrid(double q, int size) : q_(q), size_(size) {
    if (!(q > 0.0 && q < 1.0)) throw ParameterError("q must lie in the open interval (0, 1), got " + std::to_string(q));
    if (size < 1) throw ParameterError("grid size K must be positive, got " + std::to_string(size));
}

DiscElement::DiscElement(DiscGrid grid) : grid_(grid), exact_extent_(grid.size()) {}

const GridFunction* DiscElement::term(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? nullptr : &it->second;
}

void DiscElement::set_term(int degree, GridFunction f) {
    if (f.size() != size()) throw ParameterError("coefficient table length must equal K");
    if (f.is_zero()) {
        terms_.erase(degree);
    } else {
        terms_[degree] = std::move(f);
    }
}

void DiscElement::add_term(int degree, const GridFunction& f) {
    if (f.size() != size()) throw ParameterError("coefficient table length must equal K");
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        if (!f.is_zero()) terms_.emplace(degree, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

bool DiscElement::is_bounded() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.has_limit(); });
}

int DiscElement::max_shift() const noexcept {
    int m = 0;
    for (const auto& kv : terms_) m = std::max(m, std::abs(kv.first));
    return m;
}

cplx DiscElement::entry(int row, int col) const {
    if (row < 0 || col < 0) return {};
    const GridFunction* f = term(row - col);
    if (f == nullptr) return {};
    bool ignored = false;
    return f->sample(std::min(row, col), ignored).value();
}

DiscElement& DiscElement::operator+=(const DiscElement& other) {
    if (!(grid_ == other.grid_)) throw ParameterError("mismatched q or K");
    for (const auto& [d, f] : other.terms_) add_term(d, f);
    limit_exact_extent(other.exact_extent_);
    return *this;
}

DiscElement& DiscElement::operator-=(const DiscElement& other) {
    if (!(grid_ == other.grid_)) throw ParameterError("mismatched q or K");
    for (const auto& [d, f] : other.terms_) {
        GridFunction neg = f;
        neg *= -1.0;
        add_term(d, neg);
    }
    limit_exact_extent(other.exact_extent_);
    return *this;
}

DiscElement& DiscElement::operator*=(cplx c) {
    if (c == cplx{}) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

DiscElement operator*(const DiscElement& a, const DiscElement& b) { return mul(a, b); }

DiscElement mul(const DiscElement& a, const DiscElement& b) {
    if (!(a.grid() == b.grid())) throw ParameterError("mul: mismatched q or K");
    DiscElement out(a.grid());
    const int n = a.size();
    int exact = n;
    std::vector<cplx> offsets(static_cast<std::size_t>(n));
    // A read at index i is exact below the factor's exact extent, and past the
    // grid only for fully exact tables that already sit at their limit.
    auto exact_read = [n](const DiscElement& x, const GridFunction& f, long i) {
        if (i < x.exact_extent()) return true;
        return i >= n && x.exact_extent() == n && f.settled();
    };

    for (const auto& [d1, fa] : a.terms()) {
        for (const auto& [d2, fb] : b.terms()) {
            const int d = d1 + d2;
            const bool bounded = fa.has_limit() && fb.has_limit();
            const cplx limit = bounded ? fa.limit() * fb.limit() : cplx{};
            for (int m = 0; m < n; ++m) {
                // Entry (j, k) of the product with min(j, k) = m; the
                // intermediate basis index is l = j - d1.
                const long j = d >= 0 ? m + d : m;
                const long k = d >= 0 ? m : m - d;
                const long l = j - d1;
                if (l < 0) {
                    offsets[static_cast<std::size_t>(m)] = -limit;
                    continue;
                }
                const long ia = std::min(j, l);
                const long ib = std::min(l, k);
                if (m < exact && !(exact_read(a, fa, ia) && exact_read(b, fb, ib))) exact = m;
                bool ignored = false;
                const auto sa = fa.sample(ia, ignored);
                const auto sb = fb.sample(ib, ignored);
                offsets[static_cast<std::size_t>(m)] = multiply(sa, sb).offset;
            }
            out.add_term(d, bounded ? GridFunction::with_limit(limit, offsets) : GridFunction::unbounded(offsets));
        }
    }
    out.limit_exact_extent(exact);
    return out;
}

DiscElement star(const DiscElement& a) {
    DiscElement out(a.grid());
    for (const auto& [d, f] : a.terms()) out.set_term(-d, f.conj());
    out.limit_exact_extent(a.exact_extent());
    return out;
}

DiscElement sigma(const DiscElement& a, double alpha) {
    DiscElement out(a.grid());
    for (const auto& [d, f] : a.terms()) {
        GridFunction g = f;
        g *= a.grid().power(-alpha * d);
        out.set_term(d, std::move(g));
    }
    out.limit_exact_extent(a.exact_extent());
    return out;
}

Eigen::MatrixXcd to_matrix(const DiscElement& a) { return to_matrix(a, a.size()); }

Eigen::MatrixXcd to_matrix(const DiscElement& a, int n) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    bool ignored = false;
    for (const auto& [d, f] : a.terms()) {
        for (int t = 0; t < n; ++t) {
            const int row = d >= 0 ? t + d : t;
            const int col = d >= 0 ? t : t - d;
            if (row >= n || col >= n) break;
            m(row, col) = f.sample(t, ignored).value();
        }
    }
    return m;
}

CircleElement symbol(const DiscElement& a) {
    std::map<int, cplx> modes;
    for (const auto& [d, f] : a.terms()) {
        if (!f.has_limit()) {
            throw UnboundedSymbolError("symbol: coefficient of degree " + std::to_string(d) +
                                       " has no finite value at 0");
        }
        modes[d] = f.limit();
    }
    return CircleElement(std::move(modes));
}

namespace {

std::set<int> degrees(const DiscElement& a, const DiscElement& b) {
    std::set<int> out;
    for (const auto& kv : a.terms()) out.insert(kv.first);
    for (const auto& kv : b.terms()) out.insert(kv.first);
    return out;
}

cplx value_at(const GridFunction* f, int k) {
    if (f == nullptr) return {};
    bool ignored = false;
    return f->sample(k, ignored).value();
}

std::optional<cplx> limit_of(const GridFunction* f) {
    if (f == nullptr) return cplx{};
    return f->limit_if_known();
}

}  // namespace

double max_abs_difference(const DiscElement& a, const DiscElement& b, int extent) {
    double d = 0.0;
    for (int deg : degrees(a, b)) {
        const GridFunction* fa = a.term(deg);
        const GridFunction* fb = b.term(deg);
        for (int k = 0; k < extent; ++k) d = std::max(d, std::abs(value_at(fa, k) - value_at(fb, k)));
        const auto la = limit_of(fa);
        const auto lb = limit_of(fb);
        if (la && lb) d = std::max(d, std::abs(*la - *lb));
    }
    return d;
}

double max_abs_difference(const DiscElement& a, const DiscElement& b) {
    return max_abs_difference(a, b, std::min(a.exact_extent(), b.exact_extent()));
}

double max_abs_value(const DiscElement& a, int extent) {
    double m = 0.0;
    for (const auto& [d, f] : a.terms()) {
        for (int k = 0; k < extent; ++k) m = std::max(m, std::abs(value_at(&f, k)));
    }
    return m;
}

DiscElement make_generator(const Generator& g, const DiscGrid& grid) {
    const int n = grid.size();
    const double q = grid.q();
    DiscElement out(grid);
    std::vector<cplx> table(static_cast<std::size_t>(n));
    switch (g.kind) {
        case Generator::Kind::one:
            out.set_term(0, GridFunction::constant(n, 1.0));
            break;
        case Generator::Kind::z:
        case Generator::Kind::z_star: {
            // sqrt(1 - q^{2(k+1)}) = 1 - q^{2(k+1)} / (1 + sqrt(1 - q^{2(k+1)}))
            for (int k = 0; k < n; ++k) {
                const double p = std::pow(q, 2.0 * (k + 1));
                table[static_cast<std::size_t>(k)] = -p / (1.0 + std::sqrt(1.0 - p));
            }
            out.set_term(g.kind == Generator::Kind::z ? -1 : 1, GridFunction::with_limit(1.0, table));
            break;
        }
        case Generator::Kind::y:
        case Generator::Kind::y_pow: {
            const double beta = g.kind == Generator::Kind::y ? 1.0 : g.exponent;
            if (!std::isfinite(beta)) throw ParameterError("y_pow: exponent must be finite");
            if (beta == 0.0) {
                out.set_term(0, GridFunction::constant(n, 1.0));
                break;
            }
            for (int k = 0; k < n; ++k) table[static_cast<std::size_t>(k)] = std::pow(q, beta * k);
            out.set_term(0, beta > 0.0 ? GridFunction::with_limit(0.0, table) : GridFunction::unbounded(table));
            break;
        }
        case Generator::Kind::s:
            out.set_term(1, GridFunction::constant(n, 1.0));
            break;
        case Generator::Kind::s_star:
            out.set_term(-1, GridFunction::constant(n, 1.0));
            break;
        case Generator::Kind::indicator:
            if (g.index < 0 || g.index >= n) {
                throw ParameterError("indicator index " + std::to_string(g.index) + " outside the grid of size " +
                                     std::to_string(n));
            }
            table[static_cast<std::size_t>(g.index)] = 1.0;
            out.set_term(0, GridFunction::with_limit(0.0, table));
            break;
    }
    return out;
}

namespace disc {
DiscElement one(const DiscGrid& grid) { return make_generator(Generator::one(), grid); }
DiscElement z(const DiscGrid& grid) { return make_generator(Generator::z(), grid); }
DiscElement z_star(const DiscGrid& grid) { return make_generator(Generator::z_star(), grid); }
DiscElement y(const DiscGrid& grid) { return make_generator(Generator::y(), grid); }
DiscElement y_pow(const DiscGrid& grid, double beta) { return make_generator(Generator::y_pow(beta), grid); }
DiscElement s(const DiscGrid& grid) { return make_generator(Generator::s(), grid); }
DiscElement s_star(const DiscGrid& grid) { return make_generator(Generator::s_star(), grid); }
DiscElement indicator(const DiscGrid& grid, int k) { return make_generator(Generator::indicator(k), grid); }
}  // namespace disc

}  // namespace qdirac
