#pragma once

#include <complex>
#include <map>

namespace qdirac {

using cplx = std::complex<double>;

/// Trigonometric polynomial sum_m c_m e^{imt}; the target of the boundary symbol.
class CircleElement {
public:
    CircleElement() = default;
    explicit CircleElement(std::map<int, cplx> modes);

    static CircleElement mode(int m, cplx coefficient = 1.0);

    const std::map<int, cplx>& modes() const noexcept { return modes_; }
    cplx coefficient(int m) const;
    bool is_zero() const noexcept { return modes_.empty(); }

    cplx evaluate(double t) const;

    CircleElement& operator+=(const CircleElement& other);
    CircleElement& operator-=(const CircleElement& other);
    CircleElement& operator*=(cplx c);

    friend CircleElement operator+(CircleElement a, const CircleElement& b) { return a += b; }
    friend CircleElement operator-(CircleElement a, const CircleElement& b) { return a -= b; }
    friend CircleElement operator*(const CircleElement& a, const CircleElement& b);
    friend CircleElement operator*(cplx c, CircleElement a) { return a *= c; }

private:
    void prune();

    std::map<int, cplx> modes_;
};

/// Conjugation: coefficient at m becomes conj(c_{-m}).
CircleElement star(const CircleElement& a);

double max_abs_difference(const CircleElement& a, const CircleElement& b);

}  // namespace qdirac
