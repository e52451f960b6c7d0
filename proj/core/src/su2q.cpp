#include "qdirac/su2q.hpp"

#include <algorithm>
#include <set>

#include "qdirac/errors.hpp"

namespace qdirac {

SU2Element::SU2Element(DiscGrid grid) : grid_(grid) {}

SU2Element SU2Element::from_disc(const DiscElement& x, int mode) {
    SU2Element out(x.grid());
    out.add(mode, x);
    return out;
}

const DiscElement* SU2Element::part(int mode) const {
    auto it = parts_.find(mode);
    return it == parts_.end() ? nullptr : &it->second;
}

void SU2Element::add(int mode, const DiscElement& x) {
    if (!(x.grid() == grid_)) throw ParameterError("SU2Element: mismatched q or K");
    auto it = parts_.find(mode);
    if (it == parts_.end()) {
        if (!x.is_zero()) parts_.emplace(mode, x);
        return;
    }
    it->second += x;
    if (it->second.is_zero()) parts_.erase(it);
}

bool SU2Element::approximate() const noexcept {
    return std::any_of(parts_.begin(), parts_.end(), [](const auto& kv) { return kv.second.approximate(); });
}

int SU2Element::exact_extent() const noexcept {
    int e = grid_.size();
    for (const auto& kv : parts_) e = std::min(e, kv.second.exact_extent());
    return e;
}

bool SU2Element::is_bounded() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](const auto& kv) { return kv.second.is_bounded(); });
}

SU2Element SU2Element::shifted(int s) const {
    SU2Element out(grid_);
    for (const auto& [m, x] : parts_) out.parts_.emplace(m + s, x);
    return out;
}

SU2Element& SU2Element::operator+=(const SU2Element& other) {
    for (const auto& [m, x] : other.parts_) add(m, x);
    return *this;
}

SU2Element& SU2Element::operator-=(const SU2Element& other) {
    for (const auto& [m, x] : other.parts_) add(m, -x);
    return *this;
}

SU2Element& SU2Element::operator*=(cplx c) {
    if (c == cplx{}) {
        parts_.clear();
        return *this;
    }
    for (auto& kv : parts_) kv.second *= c;
    return *this;
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) { return mul(a, b); }

SU2Element mul(const SU2Element& a, const SU2Element& b) {
    if (!(a.grid() == b.grid())) throw ParameterError("su2 mul: mismatched q or K");
    SU2Element out(a.grid());
    for (const auto& [m, x] : a.parts())
        for (const auto& [n, w] : b.parts()) out.add(m + n, mul(x, w));
    return out;
}

SU2Element star(const SU2Element& a) {
    SU2Element out(a.grid());
    for (const auto& [m, x] : a.parts()) out.add(-m, star(x));
    return out;
}

SU2Element sigma(const SU2Element& a, double alpha) {
    SU2Element out(a.grid());
    for (const auto& [m, x] : a.parts()) out.add(m, sigma(x, alpha));
    return out;
}

SU2Element mul_right(const SU2Element& a, const DiscElement& x) {
    SU2Element out(a.grid());
    for (const auto& [m, p] : a.parts()) out.add(m, mul(p, x));
    return out;
}

double max_abs_difference(const SU2Element& a, const SU2Element& b, int extent) {
    std::set<int> modes;
    for (const auto& kv : a.parts()) modes.insert(kv.first);
    for (const auto& kv : b.parts()) modes.insert(kv.first);
    const DiscElement zero(a.grid());
    double d = 0.0;
    for (int m : modes) {
        const DiscElement* x = a.part(m);
        const DiscElement* w = b.part(m);
        d = std::max(d, max_abs_difference(x ? *x : zero, w ? *w : zero, extent));
    }
    return d;
}

double max_abs_difference(const SU2Element& a, const SU2Element& b) {
    return max_abs_difference(a, b, std::min(a.exact_extent(), b.exact_extent()));
}

namespace su2 {
SU2Element one(const DiscGrid& grid) { return SU2Element::from_disc(disc::one(grid), 0); }
SU2Element a(const DiscGrid& grid) { return SU2Element::from_disc(disc::z(grid), 0); }
SU2Element c(const DiscGrid& grid) { return SU2Element::from_disc(disc::y(grid), 1); }
SU2Element u(const DiscGrid& grid) { return SU2Element::from_disc(disc::one(grid), 1); }
}  // namespace su2

SparseOp left_action(const SU2Element& x, const OperatorAlgebra& algebra) {
    const long n = algebra.space().dimension();
    SparseOp out(n, n);
    for (const auto& [m, part] : x.parts()) out += algebra.mode_shift(m) * algebra.left(part);
    return out;
}

SparseOp rho_tilde(const SU2Element& x, const OperatorAlgebra& algebra) {
    for (const auto& [m, part] : x.parts())
        for (const auto& [d, f] : part.terms())
            if (!f.has_limit()) throw DomainError("rho_tilde: unbounded element", "rho_tilde", d);
    return left_action(x, algebra);
}

}  // namespace qdirac
