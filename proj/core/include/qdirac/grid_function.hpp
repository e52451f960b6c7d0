#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace qdirac {

using cplx = std::complex<double>;

/// A coefficient function f on spec(y) = {q^k : k >= 0} u {0}.
///
/// The grid values f(q^0), ..., f(q^{K-1}) are stored together with the value
/// f(0) at the accumulation point of the spectrum (the "limit"). When the limit
/// is known the table holds offsets f(q^k) - f(0) rather than raw values, so
/// that products and differences of functions close to their limit keep full
/// relative precision in the deviation. Functions such as y^{-1} have no
/// finite limit; their tables hold raw values.
class GridFunction {
public:
    /// One sample of the function, split the same way as the table.
    struct Sample {
        bool bounded = true;
        cplx limit{};
        cplx offset{};

        cplx value() const noexcept { return limit + offset; }
    };

    GridFunction() = default;

    static GridFunction constant(int size, cplx c);
    static GridFunction with_limit(cplx limit, std::vector<cplx> offsets);
    static GridFunction unbounded(std::vector<cplx> values);

    int size() const noexcept { return static_cast<int>(offsets_.size()); }
    bool has_limit() const noexcept { return limit_.has_value(); }
    /// f(0); throws std::bad_optional_access when the function has no finite limit.
    cplx limit() const { return limit_.value(); }
    const std::optional<cplx>& limit_if_known() const noexcept { return limit_; }

    /// f(q^k) for 0 <= k < size().
    cplx value(int k) const { return limit_.value_or(cplx{}) + offsets_[static_cast<std::size_t>(k)]; }
    cplx offset(int k) const { return offsets_[static_cast<std::size_t>(k)]; }
    const std::vector<cplx>& offsets() const noexcept { return offsets_; }

    /// True when the last stored offset is exactly zero, i.e. the table has
    /// already reached its limit inside the grid.
    bool settled() const noexcept { return offsets_.empty() || offsets_.back() == cplx{}; }

    /// Sample at any index k >= 0. Reads past the grid return the limit (zero
    /// for functions without one) and set `approximate` unless the table is settled.
    Sample sample(long k, bool& approximate) const;

    bool is_zero() const noexcept;
    double max_abs_value() const noexcept;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator*=(cplx c);

    GridFunction conj() const;

private:
    std::optional<cplx> limit_;
    std::vector<cplx> offsets_;
};

/// Sample-wise product, keeping the limit/offset split when both factors are bounded.
GridFunction::Sample multiply(const GridFunction::Sample& a, const GridFunction::Sample& b) noexcept;

}  // namespace qdirac
