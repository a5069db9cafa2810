#include "gelfand/kostant.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gelfand {

namespace {

bool witness_ok(const std::vector<IVec>& vs, const IVec& h) {
    for (const auto& a : vs) {
        if (a.size() != h.size()) return false;
        if (dot(h, a) <= 0) return false;
    }
    return true;
}

bool all_same_parity(const IVec& v) {
    for (int x : v)
        if ((x - v[0]) % 2 != 0) return false;
    return true;
}

// C(n + 3, 3): nonnegative solutions of t1+t2+t3+t4 = n.
long long simplex4(long long n) {
    if (n < 0) return 0;
    return (n + 3) * (n + 2) * (n + 1) / 6;
}

IVec doubled(std::initializer_list<int> eps2) { return IVec(eps2); }

}  // namespace

VectorMultiset::VectorMultiset(std::vector<IVec> vectors, IVec witness)
    : vectors_(std::move(vectors)), witness_(std::move(witness)),
      dim_(static_cast<int>(witness_.size())) {
    if (!witness_ok(vectors_, witness_))
        throw std::invalid_argument("VectorMultiset: witness does not bound an open half-space");
}

VectorMultiset VectorMultiset::with_found_witness(std::vector<IVec> vectors,
                                                 const std::vector<IVec>& candidates) {
    for (const auto& h : candidates)
        if (!vectors.empty() && witness_ok(vectors, h)) return VectorMultiset(std::move(vectors), h);
    if (vectors.empty())
        throw std::invalid_argument("VectorMultiset: empty set needs an explicit witness");
    const std::size_t n = vectors[0].size();
    IVec sum(n, 0);
    for (const auto& a : vectors) sum = add(sum, a);
    if (witness_ok(vectors, sum)) return VectorMultiset(std::move(vectors), sum);
    // Lexicographic witness (B^{n-1}, ..., B, 1): works when every vector is
    // lexicographically positive and B dominates the coordinates.
    long long big = 1;
    for (const auto& a : vectors)
        for (int x : a) big = std::max<long long>(big, 2LL * std::abs(x) * static_cast<long long>(n) + 1);
    IVec h(n, 1);
    long long p = 1;
    bool fits = true;
    for (std::size_t i = n; i-- > 0;) {
        if (p > (1LL << 20)) fits = false;
        h[i] = static_cast<int>(std::min<long long>(p, 1LL << 20));
        p *= big;
    }
    if (fits && witness_ok(vectors, h)) return VectorMultiset(std::move(vectors), h);
    throw std::invalid_argument("VectorMultiset: no half-space witness found");
}

std::size_t IVecHash::operator()(const IVec& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

PartitionFunction::PartitionFunction(VectorMultiset a) : set_(std::move(a)) {
    order_ = set_.vectors();
    std::sort(order_.begin(), order_.end(), std::greater<>());
    for (const auto& v : order_) height_.push_back(dot(set_.witness(), v));
    memo_.resize(order_.size());
}

std::size_t PartitionFunction::memo_size() const {
    std::size_t s = 0;
    for (const auto& m : memo_) s += m.size();
    return s;
}

long long PartitionFunction::operator()(const IVec& v) {
    if (static_cast<int>(v.size()) != set_.dim())
        throw std::invalid_argument("PartitionFunction: dimension mismatch");
    if (order_.empty()) {
        for (int x : v)
            if (x != 0) return 0;
        return 1;
    }
    return count(0, v);
}

long long PartitionFunction::count(std::size_t i, const IVec& v) {
    const long long hv = dot(set_.witness(), v);
    if (hv < 0) return 0;
    if (hv == 0) {
        for (int x : v)
            if (x != 0) return 0;
        return 1;
    }
    const IVec& a = order_[i];
    if (i + 1 == order_.size()) {
        // v must be a nonnegative multiple of a.
        if (hv % height_[i] != 0) return 0;
        const long long k = hv / height_[i];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (static_cast<long long>(a[j]) * k != v[j]) return 0;
        return 1;
    }
    auto& memo = memo_[i];
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    long long total = 0;
    IVec w = v;
    for (long long rem = hv; rem >= 0; rem -= height_[i]) {
        total += count(i + 1, w);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= a[j];
    }
    memo.emplace(v, total);
    return total;
}

long long partition_generic(const VectorMultiset& a, const IVec& v) {
    PartitionFunction p(a);
    return p(v);
}

VectorMultiset spin7_a_set() {
    return VectorMultiset({doubled({0, -2, 2}), doubled({-2, 0, 2}), doubled({2, -2, 0})},
                          doubled({-1, -2, 3}));
}

bool spin7_support(const IVec& v) { return partition_spin7_closed(v) > 0; }

long long partition_spin7_closed(const IVec& v) {
    if (v.size() != 3 || v[0] + v[1] + v[2] != 0)
        throw std::invalid_argument("partition_spin7_closed: vector not in the G2 plane");
    if (v[1] % 2 != 0 || v[2] % 2 != 0) return 0;
    const long long a = v[2] / 2, b = -v[1] / 2;
    if (a < 0 || b < 0) return 0;
    return std::min(a, b) + 1;
}

VectorMultiset f4_a_set() {
    std::vector<IVec> vs;
    for (int s2 : {1, -1})
        for (int s3 : {1, -1})
            for (int s4 : {1, -1}) vs.push_back({1, s2, s3, s4});
    return VectorMultiset(std::move(vs), {1, 0, 0, 0});
}

bool f4_A_support(const IVec& L) {
    if (L.size() != 4 || !all_same_parity(L)) return false;
    return std::abs(L[1]) <= L[0] && std::abs(L[2]) <= L[0] && std::abs(L[3]) <= L[0];
}

long long partition_f4_A_closed(const IVec& L) {
    if (L.size() != 4) throw std::invalid_argument("partition_f4_A_closed: need 4 coordinates");
    if (!all_same_parity(L)) return 0;
    // P and Q count the vectors with + and - in the second slot.
    const long long P = (L[0] + L[1]) / 2, Q = (L[0] - L[1]) / 2;
    if (P < 0 || Q < 0) return 0;
    long long total = 0;
    // V1, V2: doubled third and fourth coordinates contributed by the P group.
    for (long long v1 = -P; v1 <= P; v1 += 2) {
        const long long r1 = L[2] - v1;
        if (std::abs(r1) > Q) continue;
        for (long long v2 = -P; v2 <= P; v2 += 2) {
            const long long r2 = L[3] - v2;
            if (std::abs(r2) > Q) continue;
            const long long first = (2 + P - std::max(std::abs(v1), std::abs(v2))) / 2;
            const long long second = (2 + Q - std::max(std::abs(r1), std::abs(r2))) / 2;
            total += first * second;
        }
    }
    return total;
}

long long lattice_box_count(const std::array<long long, 4>& m, long long s) {
    for (long long x : m)
        if (x < 0) return 0;
    long long total = 0;
    for (int mask = 0; mask < 16; ++mask) {
        long long shift = 0;
        int bits = 0;
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) {
                shift += m[i] + 1;
                ++bits;
            }
        const long long term = simplex4(s - shift);
        total += (bits % 2 ? -term : term);
    }
    return total;
}

VectorMultiset f4_b_set() {
    std::vector<IVec> vs;
    for (IVec base : {IVec{-1, 1, 1}, IVec{1, -1, 1}, IVec{1, 1, -1}, IVec{1, 1, 1}})
        for (int s4 : {1, -1}) vs.push_back({base[0], base[1], base[2], s4});
    return VectorMultiset(std::move(vs), {1, 1, 1, 0});
}

bool f4_B_support(const IVec& L) {
    if (L.size() != 4 || !all_same_parity(L)) return false;
    return L[0] + L[1] >= 0 && L[0] + L[2] >= 0 && L[1] + L[2] >= 0 &&
           std::abs(L[3]) <= L[0] + L[1] + L[2];
}

long long partition_f4_B_closed(const IVec& L) {
    if (L.size() != 4) throw std::invalid_argument("partition_f4_B_closed: need 4 coordinates");
    if (!all_same_parity(L)) return 0;
    std::array<long long, 3> t{L[0], L[1], L[2]};
    std::sort(t.begin(), t.end(), std::greater<>());
    // Undoubled integer combinations of the sorted coordinates.
    const long long d12 = (t[0] - t[1]) / 2, d13 = (t[0] - t[2]) / 2;
    const long long s23 = (t[1] + t[2]) / 2, s14 = (t[0] + L[3]) / 2;
    long long total = 0;
    for (long long r = 0; r <= s23; ++r)
        total += lattice_box_count({d13 + r, d12 + r, r, s23 - r}, s14 + r);
    return total;
}

VectorMultiset sp_sigma_set(int n) {
    if (n < 2) throw std::invalid_argument("sp_sigma_set: n >= 2 required");
    std::vector<IVec> vs;
    for (int i = 0; i < n - 1; ++i)
        for (int s : {1, -1}) {
            IVec v(n, 0);
            v[i] = 2;
            v[n - 1] = 2 * s;
            vs.push_back(v);
        }
    IVec h(n, 1);
    h[n - 1] = 0;
    return VectorMultiset(std::move(vs), h);
}

}  // namespace gelfand
