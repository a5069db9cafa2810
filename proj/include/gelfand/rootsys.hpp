// Root systems, weight lattices and Weyl groups in exact arithmetic.
//
// Weights are stored as integer vectors holding twice the epsilon
// coordinates, so half-integral spin weights stay integral.
#pragma once

#include "gelfand/exact.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gelfand {

using IVec = std::vector<int>;

enum class Lattice : std::uint8_t { any, G, K, M };

const char* lattice_name(Lattice t);

struct lattice_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Weight {
    IVec d;  // doubled epsilon coordinates
    Lattice tag = Lattice::any;

    Weight() = default;
    explicit Weight(IVec doubled, Lattice t = Lattice::any) : d(std::move(doubled)), tag(t) {}

    static Weight from_eps(const RatVec& eps, Lattice t = Lattice::any);
    RatVec eps() const;
    std::size_t size() const { return d.size(); }
    bool is_zero() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a) {
        for (auto& x : a.d) x *= k;
        return a;
    }
    friend Weight operator-(Weight a) { return -1 * std::move(a); }
    friend bool operator==(const Weight& a, const Weight& b) { return a.d == b.d; }
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.d <=> b.d; }
};

// 4 * <x, y> for doubled vectors, i.e. the plain integer dot product.
long long dot(const IVec& x, const IVec& y);
IVec add(const IVec& x, const IVec& y);
IVec sub(const IVec& x, const IVec& y);
IVec scale(int k, const IVec& x);

class WeylElement {
public:
    WeylElement() = default;
    WeylElement(int n, std::vector<long long> num, long long den, int det);

    static WeylElement identity(int n);
    static WeylElement reflection(const IVec& root);

    int dim() const { return n_; }
    int det() const { return det_; }
    Rat entry(int i, int j) const { return Rat(num_[i * n_ + j], den_); }
    RatMat matrix() const;

    // Image of a doubled vector; throws lattice_error if the result leaves
    // the doubled integer lattice.
    IVec apply(const IVec& v) const;
    Weight apply(const Weight& w) const { return Weight(apply(w.d), w.tag); }

    WeylElement operator*(const WeylElement& o) const;
    bool is_orthogonal() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
    }
    // Lexicographic on the rational entries.
    friend bool operator<(const WeylElement& a, const WeylElement& b);

private:
    void normalize();

    int n_ = 0;
    std::vector<long long> num_;
    long long den_ = 1;
    int det_ = 1;
};

class RootSystem {
public:
    std::string label;
    int rank = 0;
    int dim = 0;
    Lattice tag = Lattice::any;
    std::vector<IVec> simple;       // doubled
    std::vector<IVec> positive;     // doubled, sorted
    std::vector<IVec> fundamental;  // doubled, one per simple root
    std::vector<IVec> central;      // doubled basis of the orthogonal complement of the roots, if modelled
    IVec rho;                       // doubled

    // <v, alpha_i^vee> for the i-th simple root.
    long long coroot_pairing(const IVec& v, int i) const;
    // Reflect in the i-th simple root.
    IVec reflect(const IVec& v, int i) const;

    Weight weight(IVec doubled) const { return Weight(std::move(doubled), tag); }

    const std::vector<WeylElement>& weyl_group() const;

private:
    mutable std::shared_ptr<const std::vector<WeylElement>> weyl_;
};

// Labels: A<n> (gl model in Z^{n+1}), B<n>, C<n>, D<n> (n >= 2), G2, F4, and
// products joined by 'x' (e.g. C2xC1) living in concatenated coordinates.
RootSystem build_root_system(std::string_view label, Lattice tag = Lattice::any);

// Generic constructor. When `fundamental` is empty it is solved inside the
// span of the simple roots.
RootSystem root_system_from_simple(std::string label, int dim, std::vector<IVec> simple,
                                   std::vector<IVec> fundamental = {},
                                   std::vector<IVec> central = {},
                                   Lattice tag = Lattice::any);

const std::vector<WeylElement>& weyl_group(const RootSystem& rs);

void check_lattice(const RootSystem& rs, const Weight& w);
bool is_dominant(const RootSystem& rs, const Weight& w);
// Coefficients against fundamental weights followed by central directions.
std::vector<long long> to_fundamental(const RootSystem& rs, const Weight& w);
Weight from_fundamental(const RootSystem& rs, const std::vector<long long>& coords);

enum class Coords { epsilon, fundamental };
// Exact conversion; epsilon output is in halves as rationals.
RatVec coords_convert(const RootSystem& rs, const Weight& w, Coords target);

// Coefficients of v in the simple-root basis, nullopt if v is not in their span.
std::optional<RatVec> simple_root_coords(const RootSystem& rs, const IVec& v);
bool dominance_leq(const RootSystem& rs, const Weight& lo, const Weight& hi);

// Dominant W-conjugate of v, with the parity of the reflections used.
struct DominantConjugate {
    IVec v;
    int sign;
};
DominantConjugate dominant_conjugate(const RootSystem& rs, IVec v);
std::vector<IVec> weyl_orbit(const RootSystem& rs, const IVec& v);

// Dominant representative of v under the rho-shifted action
// w.v = w(v + rho) - rho, with det(w); nullopt when v + rho is singular.
std::optional<DominantConjugate> shifted_dominant(const RootSystem& rs, const IVec& v);

// Product s_{i1} s_{i2} ... of simple reflections (0-based indices, the
// rightmost factor acts first).
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);
// A reduced word for w, in the same convention.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

std::uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

inline constexpr std::uint64_t kDefaultDimCap = 100000;

using WeightMults = std::map<IVec, long long>;

// Freudenthal multiplicities of the dominant weights of V_lambda.
WeightMults dominant_multiplicities(const RootSystem& rs, const Weight& lambda,
                                    std::uint64_t dim_cap = kDefaultDimCap);
// Full weight system with multiplicities.
WeightMults weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                  std::uint64_t dim_cap = kDefaultDimCap);

// Memo of weight systems for one root system; single owner, copy to share work.
class CharacterCache {
public:
    explicit CharacterCache(const RootSystem& rs, std::uint64_t dim_cap = kDefaultDimCap)
        : rs_(&rs), cap_(dim_cap) {}
    const WeightMults& character(const IVec& lambda);
    const RootSystem& root_system() const { return *rs_; }

private:
    const RootSystem* rs_;
    std::uint64_t cap_;
    std::map<IVec, WeightMults> memo_;
};

}  // namespace gelfand
