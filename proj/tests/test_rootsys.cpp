#include "doctest.h"

#include "gelfand/rootsys.hpp"

#include <random>
#include <set>

using namespace gelfand;

namespace {

Weight fund(const RootSystem& rs, std::vector<long long> c) { return from_fundamental(rs, c); }

std::size_t positive_count(const char* label) { return build_root_system(label).positive.size(); }

// All dominant weights with fundamental coordinates <= bound.
std::vector<Weight> dominant_box(const RootSystem& rs, int bound) {
    std::vector<Weight> out;
    std::vector<long long> c(rs.rank, 0);
    for (;;) {
        out.push_back(from_fundamental(rs, c));
        int i = 0;
        while (i < rs.rank && ++c[i] > bound) c[i++] = 0;
        if (i == rs.rank) break;
    }
    return out;
}

}  // namespace

TEST_CASE("positive root counts") {
    CHECK(positive_count("B3") == 9);
    CHECK(positive_count("F4") == 24);
    CHECK(positive_count("G2") == 6);
    CHECK(positive_count("C4") == 16);
    CHECK(positive_count("D4") == 12);
    CHECK(positive_count("A3") == 6);
    CHECK(positive_count("C2xC1") == 5);
}

TEST_CASE("G2 has three long and three short positive roots") {
    auto g2 = build_root_system("G2");
    int longr = 0, shortr = 0;
    for (const auto& a : g2.positive) (dot(a, a) == 24 ? longr : shortr)++;
    CHECK(longr == 3);
    CHECK(shortr == 3);
}

TEST_CASE("B3 fundamental weights") {
    auto b3 = build_root_system("B3");
    CHECK(b3.fundamental[0] == IVec{2, 0, 0});
    CHECK(b3.fundamental[1] == IVec{2, 2, 0});
    CHECK(b3.fundamental[2] == IVec{1, 1, 1});
    CHECK(b3.rho == IVec{5, 3, 1});
}

TEST_CASE("F4 data") {
    auto f4 = build_root_system("F4");
    CHECK(f4.fundamental[0] == IVec{2, 0, 0, 0});
    CHECK(f4.fundamental[1] == IVec{3, 1, 1, 1});
    CHECK(f4.fundamental[2] == IVec{4, 2, 2, 0});
    CHECK(f4.fundamental[3] == IVec{2, 2, 0, 0});
    CHECK(f4.rho == IVec{11, 5, 3, 1});
}

TEST_CASE("G2 fundamental weights in root coordinates") {
    auto g2 = build_root_system("G2");
    auto c1 = simple_root_coords(g2, g2.fundamental[0]);
    auto c2 = simple_root_coords(g2, g2.fundamental[1]);
    REQUIRE(c1);
    REQUIRE(c2);
    CHECK(*c1 == RatVec{2, 1});
    CHECK(*c2 == RatVec{3, 2});
}

TEST_CASE("fundamental weights are dual to coroots and rho sums them") {
    for (const char* lab : {"A2", "A4", "B2", "B3", "B4", "C3", "C4", "D3", "D4", "D5", "G2", "F4", "C3xC1"}) {
        auto rs = build_root_system(lab);
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j)
                CHECK(rs.coroot_pairing(rs.fundamental[i], j) == (i == j));
        IVec s(rs.dim, 0);
        for (const auto& w : rs.fundamental) s = add(s, w);
        // rho agrees with the fundamental sum up to central directions.
        for (int i = 0; i < rs.rank; ++i) CHECK(rs.coroot_pairing(sub(s, rs.rho), i) == 0);
        if (rs.central.empty()) CHECK(s == rs.rho);
    }
}

TEST_CASE("Weyl group orders") {
    CHECK(weyl_group(build_root_system("G2")).size() == 12);
    CHECK(weyl_group(build_root_system("B3")).size() == 48);
    CHECK(weyl_group(build_root_system("A3")).size() == 24);
    CHECK(weyl_group(build_root_system("C2xC1")).size() == 16);
}

TEST_CASE("Weyl group order equals the regular orbit size") {
    for (const char* lab : {"A3", "B3", "C3", "D4", "G2", "F4", "C2xC1"}) {
        auto rs = build_root_system(lab);
        const auto& w = weyl_group(rs);
        // rho is regular, so its stabilizer is trivial.
        CHECK(weyl_orbit(rs, rs.rho).size() == w.size());
        std::set<IVec> images;
        for (const auto& g : w) images.insert(g.apply(rs.rho));
        CHECK(images.size() == w.size());
    }
}

TEST_CASE("F4 Weyl group") {
    auto f4 = build_root_system("F4");
    const auto& w = weyl_group(f4);
    REQUIRE(w.size() == 1152);
    int plus = 0;
    for (const auto& g : w) {
        CHECK(g.is_orthogonal());
        CHECK((g.det() == 1 || g.det() == -1));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK((g.entry(i, j) * 2).denominator() == 1);
        plus += g.det() == 1;
    }
    CHECK(plus == 576);
    CHECK(std::is_sorted(w.begin(), w.end()));
    // Closed under composition (spot check).
    std::set<WeylElement> all(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); i += 97)
        for (std::size_t j = 0; j < w.size(); j += 89) CHECK(all.count(w[i] * w[j]) == 1);
}

TEST_CASE("dominance tests") {
    auto c3 = build_root_system("C3");
    CHECK(is_dominant(c3, Weight({2, 0, 0})));
    CHECK_FALSE(is_dominant(c3, Weight({0, 2, 0})));
    auto g2 = build_root_system("G2");
    CHECK(is_dominant(g2, fund(g2, {1, 1})));
    CHECK_THROWS_AS(is_dominant(g2, Weight({1, 0, 0})), lattice_error);
    CHECK_THROWS_AS(is_dominant(c3, Weight({1, 1, 1})), lattice_error);
}

TEST_CASE("lattice tags") {
    auto c3 = build_root_system("C3", Lattice::G);
    CHECK_THROWS_AS(check_lattice(c3, Weight({2, 0, 0}, Lattice::K)), lattice_error);
    CHECK_NOTHROW(check_lattice(c3, Weight({2, 0, 0}, Lattice::G)));
    CHECK_THROWS_AS(Weight({2}, Lattice::G) + Weight({2}, Lattice::K), lattice_error);
}

TEST_CASE("coordinate conversion examples") {
    auto b3 = build_root_system("B3");
    CHECK(coords_convert(b3, fund(b3, {0, 0, 1}), Coords::epsilon) == RatVec{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(to_fundamental(b3, Weight::from_eps({Rat(5, 2), Rat(3, 2), Rat(1, 2)})) ==
          std::vector<long long>{1, 1, 1});
    auto g2 = build_root_system("G2");
    CHECK(g2.fundamental[0] == add(scale(2, g2.simple[0]), g2.simple[1]));
    CHECK_THROWS_AS(to_fundamental(b3, Weight({1, 0, 0})), lattice_error);
}

TEST_CASE("coordinate conversion round trips") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(-6, 6);
    for (const char* lab : {"A3", "B3", "C4", "D4", "G2", "F4", "C3xC1"}) {
        auto rs = build_root_system(lab);
        const std::size_t n = rs.fundamental.size() + rs.central.size();
        for (int t = 0; t < 1000; ++t) {
            std::vector<long long> c(n);
            for (auto& x : c) x = dist(rng);
            Weight w = from_fundamental(rs, c);
            CHECK(to_fundamental(rs, w) == c);
            CHECK(Weight::from_eps(coords_convert(rs, w, Coords::epsilon)) == w);
        }
    }
}

TEST_CASE("weyl_dim examples") {
    auto b3 = build_root_system("B3");
    CHECK(weyl_dim(b3, fund(b3, {0, 0, 1})) == 8);
    CHECK(weyl_dim(b3, fund(b3, {1, 0, 0})) == 7);
    CHECK(weyl_dim(b3, fund(b3, {0, 1, 0})) == 21);
    auto f4 = build_root_system("F4");
    CHECK(weyl_dim(f4, fund(f4, {1, 0, 0, 0})) == 26);
    CHECK(weyl_dim(f4, fund(f4, {0, 0, 0, 1})) == 52);
    CHECK(weyl_dim(f4, fund(f4, {0, 0, 0, 0})) == 1);
    auto g2 = build_root_system("G2");
    CHECK(weyl_dim(g2, fund(g2, {1, 0})) == 7);
    CHECK(weyl_dim(g2, fund(g2, {0, 1})) == 14);
    auto b4 = build_root_system("B4");
    CHECK(weyl_dim(b4, fund(b4, {0, 0, 0, 1})) == 16);
    CHECK(weyl_dim(b4, fund(b4, {1, 0, 0, 0})) == 9);
    CHECK_THROWS(weyl_dim(b3, Weight({-2, 0, 0})));
}

TEST_CASE("Freudenthal examples") {
    auto g2 = build_root_system("G2");
    auto m = weight_multiplicities(g2, fund(g2, {1, 0}));
    CHECK(m.size() == 7);
    for (const auto& [w, k] : m) {
        CHECK(k == 1);
        const long long n = dot(w, w);
        CHECK((n == 0 || n == 8));  // short roots have doubled norm 8
    }
    auto f4 = build_root_system("F4");
    auto mf = weight_multiplicities(f4, fund(f4, {1, 0, 0, 0}));
    CHECK(mf.size() == 25);
    CHECK(mf.at(IVec{0, 0, 0, 0}) == 2);
    for (const auto& [w, k] : mf)
        if (dot(w, w) != 0) CHECK((k == 1 && dot(w, w) == 4));
    auto b3 = build_root_system("B3");
    auto mb = weight_multiplicities(b3, fund(b3, {0, 0, 1}));
    CHECK(mb.size() == 8);
    for (const auto& [w, k] : mb) {
        CHECK(k == 1);
        for (int x : w) CHECK(std::abs(x) == 1);
    }
}

TEST_CASE("Freudenthal sums to the Weyl dimension and is W-invariant") {
    for (const char* lab : {"A3", "B3", "C3", "D4", "G2", "C2xC1"}) {
        auto rs = build_root_system(lab);
        for (const auto& lam : dominant_box(rs, 2)) {
            const auto dim = weyl_dim(rs, lam);
            if (dim > 10000) continue;
            auto m = weight_multiplicities(rs, lam);
            long long total = 0;
            for (const auto& [w, k] : m) total += k;
            CHECK(total == static_cast<long long>(dim));
            for (const auto& g : weyl_group(rs))
                for (const auto& [w, k] : m) {
                    auto it = m.find(g.apply(w));
                    REQUIRE(it != m.end());
                    CHECK(it->second == k);
                }
        }
    }
    auto f4 = build_root_system("F4");
    for (const auto& lam : dominant_box(f4, 1)) {
        const auto dim = weyl_dim(f4, lam);
        if (dim > 10000) continue;
        long long total = 0;
        for (const auto& [w, k] : weight_multiplicities(f4, lam)) total += k;
        CHECK(total == static_cast<long long>(dim));
    }
}

TEST_CASE("Freudenthal cap") {
    auto f4 = build_root_system("F4");
    CHECK_THROWS_AS(weight_multiplicities(f4, fund(f4, {2, 2, 2, 2}), 1000), cap_exceeded);
}

TEST_CASE("dominance order examples") {
    auto g2 = build_root_system("G2");
    CHECK(dominance_leq(g2, fund(g2, {0, 0}), fund(g2, {1, 0})));
    auto b3 = build_root_system("B3");
    CHECK_FALSE(dominance_leq(b3, fund(b3, {1, 0, 0}), fund(b3, {0, 0, 1})));
    CHECK(dominance_leq(b3, fund(b3, {0, 0, 1}), fund(b3, {0, 0, 1})));
}

TEST_CASE("dominance is a partial order") {
    std::mt19937 rng(11);
    for (const char* lab : {"B3", "G2", "C3", "A3"}) {
        auto rs = build_root_system(lab);
        auto box = dominant_box(rs, 2);
        std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
        for (int t = 0; t < 300; ++t) {
            const auto& a = box[pick(rng)];
            const auto& b = box[pick(rng)];
            const auto& c = box[pick(rng)];
            CHECK(dominance_leq(rs, a, a));
            if (dominance_leq(rs, a, b) && dominance_leq(rs, b, a)) CHECK(a == b);
            if (dominance_leq(rs, a, b) && dominance_leq(rs, b, c)) CHECK(dominance_leq(rs, a, c));
        }
    }
}

TEST_CASE("reduced words reproduce their elements") {
    for (const char* lab : {"G2", "B3", "F4"}) {
        auto rs = build_root_system(lab);
        std::size_t longest = 0;
        for (const auto& w : rs.weyl_group()) {
            const auto word = reduced_word(rs, w);
            CHECK(weyl_from_word(rs, word) == w);
            CHECK(w.det() == (word.size() % 2 ? -1 : 1));
            longest = std::max(longest, word.size());
        }
        CHECK(longest == rs.positive.size());
    }
    auto g2 = build_root_system("G2");
    // s1 s2 acts as s2 first.
    const IVec v{6, -2, -4};
    CHECK(weyl_from_word(g2, {0, 1}).apply(v) == g2.reflect(g2.reflect(v, 1), 0));
    CHECK_THROWS_AS(weyl_from_word(g2, {2}), std::invalid_argument);
}

TEST_CASE("shifted dominant representative") {
    auto g2 = build_root_system("G2");
    // -rho is singular for every shifted action.
    CHECK_FALSE(shifted_dominant(g2, scale(-1, g2.rho)).has_value());
    const IVec lam = fund(g2, {1, 2}).d;
    for (const auto& w : g2.weyl_group()) {
        const IVec moved = sub(w.apply(add(lam, g2.rho)), g2.rho);
        auto sd = shifted_dominant(g2, moved);
        REQUIRE(sd.has_value());
        CHECK(sd->v == lam);
        CHECK(sd->sign == w.det());
    }
    // -varpi1 + rho = varpi2 lies on a wall.
    CHECK_FALSE(shifted_dominant(g2, sub(IVec(3, 0), g2.fundamental[0])).has_value());
}
