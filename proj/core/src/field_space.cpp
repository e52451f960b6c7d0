#include "qdirac/field_space.hpp"

#include <cmath>
#include <vector>

#include "qdirac/errors.hpp"

namespace qdirac {

namespace {
using Triplet = Eigen::Triplet<cplx>;

SparseOp from_triplets(long rows, long cols, const std::vector<Triplet>& t) {
    SparseOp out(rows, cols);
    out.setFromTriplets(t.begin(), t.end());
    return out;
}
}  // namespace

TruncatedSpace::TruncatedSpace(double q, double alpha, int size, int modes) : l2_(q, size, alpha), modes_(modes) {
    if (modes < 0) throw ParameterError("mode cutoff M must be non-negative");
}

long TruncatedSpace::dimension() const noexcept {
    const long n = size();
    return (2L * modes_ + 1) * n * n;
}

long TruncatedSpace::index(int m, int j, int k) const noexcept {
    const long n = size();
    return ((static_cast<long>(m) + modes_) * n + j) * n + k;
}

bool TruncatedSpace::contains(int m, int j, int k) const noexcept {
    return std::abs(m) <= modes_ && j >= 0 && k >= 0 && j < size() && k < size();
}

TruncatedSpace::Site TruncatedSpace::site(long i) const noexcept {
    const long n = size();
    Site s;
    s.k = static_cast<int>(i % n);
    s.j = static_cast<int>((i / n) % n);
    s.m = static_cast<int>(i / (n * n)) - modes_;
    return s;
}

int TruncatedSpace::grade(long i) const noexcept {
    const Site s = site(i);
    return (s.j - s.k) - s.m;
}

double TruncatedSpace::weight(long i) const { return l2_.weight(site(i).k); }

Eigen::VectorXd TruncatedSpace::sqrt_weights() const {
    Eigen::VectorXd w(dimension());
    for (long i = 0; i < w.size(); ++i) w[i] = std::sqrt(weight(i));
    return w;
}

bool TruncatedSpace::interior(long i, int margin, int mode_margin) const noexcept {
    const Site s = site(i);
    return s.j < size() - margin && s.k < size() - margin && std::abs(s.m) <= modes_ - mode_margin;
}

TruncatedSpace TruncatedSpace::padded(int pad, int mode_pad) const {
    return TruncatedSpace(q(), alpha(), size() + pad, modes_ + mode_pad);
}

cplx inner(const TruncatedSpace& space, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) {
    cplx sum{};
    for (long i = 0; i < f.size(); ++i) sum += space.weight(i) * std::conj(f[i]) * g[i];
    return sum;
}

SparseOp to_orthonormal(const TruncatedSpace& space, const SparseOp& a) {
    const Eigen::VectorXd w = space.sqrt_weights();
    SparseOp out = a;
    for (int c = 0; c < out.outerSize(); ++c)
        for (SparseOp::InnerIterator it(out, c); it; ++it) it.valueRef() *= w[it.row()] / w[it.col()];
    return out;
}

namespace {
std::vector<long> site_map(const TruncatedSpace& outer, const TruncatedSpace& inner) {
    std::vector<long> map(static_cast<std::size_t>(outer.dimension()), -1);
    for (long i = 0; i < outer.dimension(); ++i) {
        const auto s = outer.site(i);
        if (inner.contains(s.m, s.j, s.k)) map[static_cast<std::size_t>(i)] = inner.index(s.m, s.j, s.k);
    }
    return map;
}
}  // namespace

SparseOp compress(const SparseOp& a, const TruncatedSpace& outer, const TruncatedSpace& inner) {
    const long blocks = a.rows() / outer.dimension();
    const auto map = site_map(outer, inner);
    const long no = outer.dimension();
    const long ni = inner.dimension();
    auto mapped = [&](long i) -> long {
        const long b = i / no;
        const long r = map[static_cast<std::size_t>(i % no)];
        return r < 0 ? -1 : b * ni + r;
    };
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros()));
    for (int c = 0; c < a.outerSize(); ++c) {
        const long cc = mapped(c);
        if (cc < 0) continue;
        for (SparseOp::InnerIterator it(a, c); it; ++it) {
            const long rr = mapped(it.row());
            if (rr >= 0) t.emplace_back(rr, cc, it.value());
        }
    }
    return from_triplets(blocks * ni, blocks * ni, t);
}

Eigen::VectorXcd restrict_vector(const Eigen::VectorXcd& v, const TruncatedSpace& outer, const TruncatedSpace& inner) {
    const auto map = site_map(outer, inner);
    const long blocks = v.size() / outer.dimension();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(blocks * inner.dimension());
    for (long b = 0; b < blocks; ++b)
        for (long i = 0; i < outer.dimension(); ++i) {
            const long r = map[static_cast<std::size_t>(i)];
            if (r >= 0) out[b * inner.dimension() + r] = v[b * outer.dimension() + i];
        }
    return out;
}

Eigen::VectorXcd embed_vector(const Eigen::VectorXcd& v, const TruncatedSpace& inner, const TruncatedSpace& outer) {
    const auto map = site_map(outer, inner);
    const long blocks = v.size() / inner.dimension();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(blocks * outer.dimension());
    for (long b = 0; b < blocks; ++b)
        for (long i = 0; i < outer.dimension(); ++i) {
            const long r = map[static_cast<std::size_t>(i)];
            if (r >= 0) out[b * outer.dimension() + i] = v[b * inner.dimension() + r];
        }
    return out;
}

SparseOp block2x2(const SparseOp& a, const SparseOp& b, const SparseOp& c, const SparseOp& d) {
    const long n = a.rows();
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros() + b.nonZeros() + c.nonZeros() + d.nonZeros()));
    auto put = [&](const SparseOp& m, long r0, long c0) {
        for (int col = 0; col < m.outerSize(); ++col)
            for (SparseOp::InnerIterator it(m, col); it; ++it) t.emplace_back(r0 + it.row(), c0 + col, it.value());
    };
    put(a, 0, 0);
    put(b, 0, n);
    put(c, n, 0);
    put(d, n, n);
    return from_triplets(2 * n, 2 * n, t);
}

OperatorAlgebra::OperatorAlgebra(TruncatedSpace space) : space_(space) {}

SparseOp OperatorAlgebra::identity() const {
    SparseOp id(space_.dimension(), space_.dimension());
    id.setIdentity();
    return id;
}

SparseOp OperatorAlgebra::left(const DiscElement& x) const {
    if (!(x.grid() == space_.grid())) throw ParameterError("left: element grid differs from the space");
    const int n = space_.size();
    const int mm = space_.modes();
    std::vector<Triplet> t;
    for (const auto& kv : x.terms()) {
        const int d = kv.first;
        for (int j = 0; j < n; ++j) {
            const int jp = j + d;
            if (jp < 0 || jp >= n) continue;
            const cplx v = x.entry(jp, j);
            if (v == cplx{}) continue;
            for (int m = -mm; m <= mm; ++m)
                for (int k = 0; k < n; ++k) t.emplace_back(space_.index(m, jp, k), space_.index(m, j, k), v);
        }
    }
    return from_triplets(space_.dimension(), space_.dimension(), t);
}

SparseOp OperatorAlgebra::right(const DiscElement& x) const {
    if (!(x.grid() == space_.grid())) throw ParameterError("right: element grid differs from the space");
    const int n = space_.size();
    const int mm = space_.modes();
    std::vector<Triplet> t;
    for (const auto& kv : x.terms()) {
        const int d = kv.first;
        for (int k = 0; k < n; ++k) {
            const int kp = k - d;  // E_jk x = sum x(k, k') E_jk'
            if (kp < 0 || kp >= n) continue;
            const cplx v = x.entry(k, kp);
            if (v == cplx{}) continue;
            for (int m = -mm; m <= mm; ++m)
                for (int j = 0; j < n; ++j) t.emplace_back(space_.index(m, j, kp), space_.index(m, j, k), v);
        }
    }
    return from_triplets(space_.dimension(), space_.dimension(), t);
}

SparseOp OperatorAlgebra::mode_shift(int s) const {
    const int n = space_.size();
    const int mm = space_.modes();
    std::vector<Triplet> t;
    for (int m = -mm; m <= mm; ++m) {
        if (std::abs(m + s) > mm) continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t.emplace_back(space_.index(m + s, j, k), space_.index(m, j, k), 1.0);
    }
    return from_triplets(space_.dimension(), space_.dimension(), t);
}

SparseOp OperatorAlgebra::dt() const {
    const int n = space_.size();
    const int mm = space_.modes();
    std::vector<Triplet> t;
    for (int m = -mm; m <= mm; ++m) {
        if (m == 0) continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t.emplace_back(space_.index(m, j, k), space_.index(m, j, k), cplx(0.0, m));
    }
    return from_triplets(space_.dimension(), space_.dimension(), t);
}

}  // namespace qdirac
