#include "doctest.h"

#include "gelfand/kostant.hpp"

#include <algorithm>
#include <random>

using namespace gelfand;

namespace {

// Exhaustive count with every coefficient bounded by <h,v>/<h,a>.
long long brute_partition(const VectorMultiset& a, const IVec& v) {
    const auto& vs = a.vectors();
    const long long hv = dot(a.witness(), v);
    if (hv < 0) return 0;
    long long count = 0;
    IVec acc(v.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long long budget) -> void {
        if (i == vs.size()) {
            if (acc == v) ++count;
            return;
        }
        const long long h = dot(a.witness(), vs[i]);
        for (long long k = 0; k * h <= budget; ++k) {
            self(self, i + 1, budget - k * h);
            acc = add(acc, vs[i]);
        }
        long long kmax = budget / h;
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= static_cast<int>((kmax + 1) * vs[i][j]);
    };
    rec(rec, 0, hv);
    return count;
}

long long brute_box(const std::array<long long, 4>& m, long long s) {
    long long c = 0;
    for (long long a = 0; a <= m[0]; ++a)
        for (long long b = 0; b <= m[1]; ++b)
            for (long long d = 0; d <= m[2]; ++d) {
                const long long e = s - a - b - d;
                if (e >= 0 && e <= m[3]) ++c;
            }
    return c;
}

// Doubled points of Z^4 and (1/2,...)+Z^4 with every |Lambda_i| <= bound.
std::vector<IVec> f4_lattice_points(int bound) {
    std::vector<IVec> pts;
    for (int parity : {0, 1})
        for (int a = -2 * bound; a <= 2 * bound; ++a)
            for (int b = -2 * bound; b <= 2 * bound; ++b)
                for (int c = -2 * bound; c <= 2 * bound; ++c)
                    for (int d = -2 * bound; d <= 2 * bound; ++d) {
                        IVec v{a, b, c, d};
                        if (std::all_of(v.begin(), v.end(), [&](int x) { return (x & 1) == parity; }))
                            pts.push_back(v);
                    }
    return pts;
}

}  // namespace

TEST_CASE("witness validation rejects sets outside a half-space") {
    CHECK_THROWS_AS(VectorMultiset({{2, 0}, {-2, 0}}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(VectorMultiset({{2, 0}}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(VectorMultiset::with_found_witness({{2, 0}, {-2, 0}}), std::invalid_argument);
    auto found = VectorMultiset::with_found_witness({{2, 0}, {0, 2}, {2, -4}});
    for (const auto& a : found.vectors()) CHECK(dot(found.witness(), a) > 0);
}

TEST_CASE("generic partition function examples") {
    auto a = spin7_a_set();
    // 2 eps1 + eps2 in doubled G2 coordinates.
    const IVec v = add(scale(2, a.vectors()[0]), a.vectors()[1]);
    CHECK(partition_generic(a, v) == 3);
    CHECK(partition_generic(a, IVec{0, 0, 0}) == 1);
    CHECK(partition_generic(f4_a_set(), IVec{2, 0, 0, 0}) == 4);
    CHECK(brute_partition(f4_a_set(), IVec{2, 0, 0, 0}) == 4);
    CHECK(partition_generic(f4_b_set(), IVec{0, 0, 0, 0}) == 1);
    // Multiset duplicates are counted separately.
    VectorMultiset dup({{2}, {2}}, {1});
    CHECK(partition_generic(dup, IVec{6}) == 4);
}

TEST_CASE("generic partition function is independent of element order") {
    std::mt19937 rng(7);
    for (const auto& base : {f4_a_set(), f4_b_set(), sp_sigma_set(4), spin7_a_set()}) {
        auto vs = base.vectors();
        std::vector<IVec> probes;
        std::uniform_int_distribution<int> coord(-3, 3);
        for (int t = 0; t < 40; ++t) {
            IVec v(base.dim(), 0);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(vs.size()) - 1);
            for (int s = 0; s < 5; ++s) v = add(v, vs[pick(rng)]);
            if (t % 2) v[0] += 2 * coord(rng);
            probes.push_back(v);
        }
        PartitionFunction ref(base);
        for (int perm = 0; perm < 5; ++perm) {
            std::shuffle(vs.begin(), vs.end(), rng);
            PartitionFunction p(VectorMultiset(vs, base.witness()));
            for (const auto& v : probes) CHECK(p(v) == ref(v));
        }
    }
}

TEST_CASE("generic partition function matches bounded brute force") {
    for (const auto& a : {f4_a_set(), f4_b_set()}) {
        PartitionFunction p(a);
        for (const auto& v : f4_lattice_points(1)) CHECK(p(v) == brute_partition(a, v));
    }
    PartitionFunction s(sp_sigma_set(3));
    for (int x = -6; x <= 6; x += 2)
        for (int y = -6; y <= 6; y += 2)
            for (int z = -10; z <= 10; z += 2) {
                IVec v{x, y, z};
                CHECK(s(v) == brute_partition(sp_sigma_set(3), v));
            }
}

TEST_CASE("spin7 closed form") {
    // 3 eps1 + 2 eps2, eps2, -eps1 in doubled G2 coordinates.
    const IVec e1{0, -2, 2}, e2{-2, 0, 2}, e3{2, -2, 0};
    CHECK(partition_spin7_closed(add(scale(3, e1), scale(2, e2))) == 4);
    CHECK(partition_spin7_closed(e2) == 1);
    CHECK(partition_spin7_closed(scale(-1, e1)) == 0);
    CHECK(partition_spin7_closed(add(scale(4, e1), scale(5, e3))) == 5);
    CHECK_THROWS_AS(partition_spin7_closed(IVec{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("spin7 closed form agrees with the generic count on the G2 lattice") {
    PartitionFunction p(spin7_a_set());
    int checked = 0;
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) {
            const int z = -x - y;
            if (std::abs(z) > 6) continue;
            const IVec v{2 * x, 2 * y, 2 * z};
            const long long closed = partition_spin7_closed(v);
            CHECK(closed == p(v));
            CHECK((closed > 0) == (z >= 0 && y <= 0));
            ++checked;
        }
    CHECK(checked == 127);
}

TEST_CASE("lattice box count") {
    CHECK(lattice_box_count({1, 1, 1, 1}, 2) == 6);
    CHECK(lattice_box_count({0, 0, 0, 0}, 0) == 1);
    CHECK(lattice_box_count({2, 1, 0, 3}, 7) == 0);
    CHECK(lattice_box_count({2, 1, 0, 3}, -1) == 0);
    CHECK(lattice_box_count({-1, 1, 0, 3}, 1) == 0);
    for (long long a = 0; a <= 4; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (long long c = 0; c <= 3; ++c)
                for (long long d = 0; d <= 2; ++d)
                    for (long long s = -1; s <= 13; ++s)
                        CHECK(lattice_box_count({a, b, c, d}, s) == brute_box({a, b, c, d}, s));
}

TEST_CASE("F4 closed forms: examples") {
    CHECK(partition_f4_A_closed(IVec{2, 0, 0, 0}) == 4);
    CHECK(partition_f4_A_closed(IVec{0, 0, 0, 0}) == 1);
    CHECK(partition_f4_A_closed(IVec{2, 4, 0, 0}) == 0);
    CHECK(partition_f4_B_closed(IVec{0, 0, 0, 0}) == 1);
    const long long b1100 = partition_f4_B_closed(IVec{2, 2, 0, 0});
    CHECK(b1100 > 0);
    CHECK(b1100 == brute_partition(f4_b_set(), IVec{2, 2, 0, 0}));
    CHECK(partition_f4_B_closed(IVec{2, 0, 0, 4}) == 0);
    // Half-integral and mixed-parity inputs.
    CHECK(partition_f4_A_closed(IVec{1, 1, 1, 1}) == 1);
    CHECK(partition_f4_A_closed(IVec{1, 0, 0, 0}) == 0);
}

TEST_CASE("F4 closed forms agree with the generic count for |Lambda_i| <= 6") {
    PartitionFunction pa(f4_a_set()), pb(f4_b_set());
    long long mismatches = 0, support_a = 0, support_b = 0;
    const auto pts = f4_lattice_points(6);
    for (const auto& v : pts) {
        const long long a = partition_f4_A_closed(v), b = partition_f4_B_closed(v);
        if (a != pa(v) || b != pb(v)) ++mismatches;
        if ((a > 0) != f4_A_support(v)) ++support_a;
        if ((b > 0) != f4_B_support(v)) ++support_b;
    }
    CHECK(pts.size() == 13u * 13 * 13 * 13 + 12u * 12 * 12 * 12);
    CHECK(mismatches == 0);
    CHECK(support_a == 0);
    CHECK(support_b == 0);
}

TEST_CASE("symplectic sigma set") {
    auto s = sp_sigma_set(3);
    CHECK(s.size() == 4);
    // eps1 - eps3 and eps1 + 3 eps3.
    CHECK(partition_generic(s, IVec{2, 0, -2}) == 1);
    CHECK(partition_generic(s, IVec{2, 0, 6}) == 0);
    CHECK(partition_generic(s, IVec{0, 0, 4}) == 0);
    CHECK_THROWS_AS(sp_sigma_set(1), std::invalid_argument);
}
