#include "qdirac/circle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qdirac {

CircleElement::CircleElement(std::map<int, cplx> modes) : modes_(std::move(modes)) { prune(); }

CircleElement CircleElement::mode(int m, cplx coefficient) { return CircleElement({{m, coefficient}}); }

cplx CircleElement::coefficient(int m) const {
    auto it = modes_.find(m);
    return it == modes_.end() ? cplx{} : it->second;
}

cplx CircleElement::evaluate(double t) const {
    cplx sum{};
    for (const auto& [m, c] : modes_) sum += c * std::polar(1.0, m * t);
    return sum;
}

CircleElement& CircleElement::operator+=(const CircleElement& other) {
    for (const auto& [m, c] : other.modes_) modes_[m] += c;
    prune();
    return *this;
}

CircleElement& CircleElement::operator-=(const CircleElement& other) {
    for (const auto& [m, c] : other.modes_) modes_[m] -= c;
    prune();
    return *this;
}

CircleElement& CircleElement::operator*=(cplx c) {
    for (auto& [m, v] : modes_) v *= c;
    prune();
    return *this;
}

CircleElement operator*(const CircleElement& a, const CircleElement& b) {
    std::map<int, cplx> out;
    for (const auto& [m, x] : a.modes_)
        for (const auto& [n, w] : b.modes_) out[m + n] += x * w;
    return CircleElement(std::move(out));
}

void CircleElement::prune() { std::erase_if(modes_, [](const auto& kv) { return kv.second == cplx{}; }); }

CircleElement star(const CircleElement& a) {
    std::map<int, cplx> out;
    for (const auto& [m, c] : a.modes()) out[-m] = std::conj(c);
    return CircleElement(std::move(out));
}

double max_abs_difference(const CircleElement& a, const CircleElement& b) {
    std::set<int> keys;
    for (const auto& kv : a.modes()) keys.insert(kv.first);
    for (const auto& kv : b.modes()) keys.insert(kv.first);
    double d = 0.0;
    for (int m : keys) d = std::max(d, std::abs(a.coefficient(m) - b.coefficient(m)));
    return d;
}

}  // namespace qdirac
