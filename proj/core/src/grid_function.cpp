#include "qdirac/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdirac {

GridFunction GridFunction::constant(int size, cplx c) {
    GridFunction f;
    f.limit_ = c;
    f.offsets_.assign(static_cast<std::size_t>(size), cplx{});
    return f;
}

GridFunction GridFunction::with_limit(cplx limit, std::vector<cplx> offsets) {
    GridFunction f;
    f.limit_ = limit;
    f.offsets_ = std::move(offsets);
    return f;
}

GridFunction GridFunction::unbounded(std::vector<cplx> values) {
    GridFunction f;
    f.offsets_ = std::move(values);
    return f;
}

GridFunction::Sample GridFunction::sample(long k, bool& approximate) const {
    Sample s;
    s.bounded = limit_.has_value();
    s.limit = limit_.value_or(cplx{});
    if (k < size()) {
        s.offset = offsets_[static_cast<std::size_t>(k)];
    } else if (!settled()) {
        approximate = true;
    }
    return s;
}

bool GridFunction::is_zero() const noexcept {
    if (limit_ && *limit_ != cplx{}) return false;
    return std::all_of(offsets_.begin(), offsets_.end(), [](cplx v) { return v == cplx{}; });
}

double GridFunction::max_abs_value() const noexcept {
    double m = limit_ ? std::abs(*limit_) : 0.0;
    for (int k = 0; k < size(); ++k) m = std::max(m, std::abs(value(k)));
    return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    if (other.size() != size()) throw std::invalid_argument("GridFunction: size mismatch");
    if (limit_ && other.limit_) {
        *limit_ += *other.limit_;
        for (std::size_t k = 0; k < offsets_.size(); ++k) offsets_[k] += other.offsets_[k];
        return *this;
    }
    // Either side lacks a finite limit: fall back to raw values.
    const cplx mine = limit_.value_or(cplx{});
    const cplx theirs = other.limit_.value_or(cplx{});
    for (std::size_t k = 0; k < offsets_.size(); ++k) {
        offsets_[k] += mine + other.offsets_[k] + theirs;
    }
    limit_.reset();
    return *this;
}

GridFunction& GridFunction::operator*=(cplx c) {
    if (limit_) *limit_ *= c;
    for (auto& v : offsets_) v *= c;
    return *this;
}

GridFunction GridFunction::conj() const {
    GridFunction f;
    if (limit_) f.limit_ = std::conj(*limit_);
    f.offsets_.reserve(offsets_.size());
    for (auto v : offsets_) f.offsets_.push_back(std::conj(v));
    return f;
}

GridFunction::Sample multiply(const GridFunction::Sample& a, const GridFunction::Sample& b) noexcept {
    GridFunction::Sample r;
    if (a.bounded && b.bounded) {
        r.bounded = true;
        r.limit = a.limit * b.limit;
        r.offset = a.limit * b.offset + a.offset * b.limit + a.offset * b.offset;
    } else {
        r.bounded = false;
        r.offset = a.value() * b.value();
    }
    return r;
}

}  // namespace qdirac
