// Branching multiplicities m_lambda(mu) for the rank one multiplicity free
// pairs: a chamber-aware Kostant sum, pair-specific closed forms, and an
// independent oracle that peels characters off the restricted weight system.
//
// Unless stated otherwise weights are doubled epsilon coordinates of the
// relevant root system. The symplectic closed forms take plain (undoubled)
// epsilon coordinates, matching how those rules are usually written.
#pragma once

#include "gelfand/kostant.hpp"
#include "gelfand/rootsys.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gelfand {

// Integer matrix on doubled coordinates followed by exact division.
struct LinearMap {
    std::vector<IVec> rows;
    int divisor = 1;
    int src_dim = 0;

    static LinearMap identity(int n);
    int dst_dim() const { return static_cast<int>(rows.size()); }
    // Throws lattice_error if the image leaves the integer lattice.
    IVec apply(const IVec& v) const;
};

// A positive system of G chosen to contain R_K^+ (through the restriction),
// described by the Weyl element carrying the standard one onto it.
struct Chamber {
    std::string name;
    WeylElement to_chamber;   // w~; identity for the standard chamber
    IVec rho;                 // w~ rho_G
    VectorMultiset a_set;     // q(w~ R_G^+) - R_K^+
    // Optional closed-form partition function and support predicate for a_set.
    std::function<long long(const IVec&)> closed;
    std::function<bool(const IVec&)> support;
};

enum class PairKind { su_n, so_odd, so_even, sp_n, f4_spin9, spin7_g2, g2_su3 };

// Multiplicity free faces of P_K^+: mu is admissible when its fundamental
// support lies inside one of `faces` (or any face if `faces` is empty) and
// has at most `max_rank` elements.
struct FaceRule {
    std::vector<std::vector<int>> faces;
    int max_rank = 1 << 20;
    bool admits(const std::vector<long long>& mu_fundamental, int k_rank) const;
};

struct PairDescriptor {
    std::string id;
    PairKind kind{};
    int n = 0;
    RootSystem G, K;
    LinearMap q;  // G -> K
    IVec lambda_sph;
    std::vector<Chamber> chambers;  // [0] is the standard chamber
    FaceRule faces;
    // K -> M restriction and the projection p : P_G^+ -> P_M^+ along lambda_sph.
    std::optional<RootSystem> M;
    LinearMap k_to_m;
    std::function<IVec(const IVec&)> project;
};

// Accepts "spin7-g2", "g2-su3", "f4-spin9", "sp-<n>", "su-<n>", "so-odd-<n>",
// "so-even-<n>"; the bare family names take `default_n`.
PairDescriptor make_pair_descriptor(std::string_view id, int default_n = 3);
std::vector<std::string> pair_identifiers();

struct KostantStats {
    long long terms = 0;       // Weyl elements visited
    long long evaluated = 0;   // partition values actually computed
    std::vector<int> survivors;  // indices into G.weyl_group() with a term passing the support test
};

// Kostant sum  m = sum_w det(w) p(q(w(w~lambda + rho~) - rho~) - mu). Valid for
// arbitrary lattice arguments (antisymmetric extension). Single owner.
class KostantBrancher {
public:
    explicit KostantBrancher(const PairDescriptor& pair, int chamber = 0, bool use_closed = true);
    long long operator()(const IVec& lambda, const IVec& mu, KostantStats* stats = nullptr);
    const PairDescriptor& pair() const { return *pair_; }

private:
    const PairDescriptor* pair_;
    const Chamber* chamber_;
    bool use_closed_;
    PartitionFunction generic_;
    std::vector<LinearMap> maps_;       // q o (w w~) for every w in W_G
    std::vector<IVec> offsets_;         // q(w rho~ - rho~)
    std::vector<int> det_;
};

long long branch_kostant(const PairDescriptor& pair, const IVec& lambda, const IVec& mu);

struct BranchingTable {
    IVec lambda;
    std::map<IVec, long long> entries;  // K-dominant doubled weight -> multiplicity
    long long dim_sum(const RootSystem& K) const;
};

// Restricts the weight system of V_lambda and peels K-characters from the top
// (maximal <rho_K, v>, ties broken lexicographically). Throws cap_exceeded or
// std::logic_error on a negative residual.
BranchingTable branch_oracle(const RootSystem& G, const RootSystem& K, const LinearMap& q,
                             const IVec& lambda, CharacterCache& k_chars,
                             std::uint64_t dim_cap = kDefaultDimCap);
BranchingTable branch_oracle(const PairDescriptor& pair, const IVec& lambda,
                             std::uint64_t dim_cap = kDefaultDimCap);

// All nonzero Kostant multiplicities of V_lambda; candidates are the K-dominant
// restricted weights.
BranchingTable kostant_table(KostantBrancher& kb, const IVec& lambda,
                             std::uint64_t dim_cap = kDefaultDimCap);

// ----------------------------------------------------------- Spin(7) > G2

// lambda = klm and mu = (m1, m2) in fundamental coordinates. Six-term A2
// multiplicity function followed by the correction at s1 mu - eps3.
long long branch_spin7_g2(const IVec& klm, const IVec& mu);

// ----------------------------------------------------------- G2 > SU(3)

// Exact value through the Kostant sum (fundamental coordinates).
long long branch_g2_su3(const IVec& lambda, const IVec& mu);
// Large-n1 limit min{m1+1, m2+1, m1+m2-n2+1, n2+1}, clipped at 0.
long long g2_su3_min_formula(long long n2, long long m1, long long m2);
// SU(3) -> SU(2) along the root beta2: min{n2+1, min(m1,m2)+1, m1+m2-n2+1}, clipped at 0.
long long branch_su3_su2(long long m1, long long m2, long long n2);

// ----------------------------------------------------------- Sp(2n) > Sp(2n-2) x Sp(2)

struct LepowskyData {
    std::vector<long long> A;
    bool gate = false;  // all A_i >= 0 and b_n + sum A even
};
LepowskyData lepowsky_data(const std::vector<long long>& a, const std::vector<long long>& b);
// a, b plain epsilon coordinates of length n >= 3. `sigma` may carry a memo
// for sp_sigma_set(n) across calls.
long long branch_sp_lepowsky(int n, const std::vector<long long>& a, const std::vector<long long>& b,
                             PartitionFunction* sigma = nullptr);
// 0/1 rule for mu on a face of rank <= 2; throws std::invalid_argument otherwise.
long long branch_sp_closed(int n, const std::vector<long long>& a, const std::vector<long long>& b);

// ----------------------------------------------------------- F4 > Spin(9)

enum class F4Chamber { standard, translated };
// lambda, mu in fundamental coordinates.
long long branch_f4_spin9(const IVec& lambda, const IVec& mu, F4Chamber chamber = F4Chamber::translated,
                          KostantStats* stats = nullptr);

// Spin(9) -> Spin(7) on the three multiplicity free faces. mu = (mu1..mu4)
// fundamental, nu = (nu1, nu2, nu3) in the eta basis (nu = l4 eta1 + l3 eta2 + l2 eta3).
// Throws std::invalid_argument for mu off the faces.
long long branch_spin9_spin7(const IVec& mu, const IVec& nu);
// All admitted nu for mu, by the same inequalities.
std::vector<IVec> spin9_spin7_spectrum(const IVec& mu);

// The element carrying the standard F4 chamber to the one with Weyl vector
// 1/2(9,7,5,1), and the Weyl element w_M used for the M projection.
WeylElement f4_translating_element();
WeylElement f4_w_m();

}  // namespace gelfand
