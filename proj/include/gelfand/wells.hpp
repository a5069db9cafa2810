// Induced spectra P_G^+(mu) of multiplicity free systems: wells, bottoms,
// degree functions and the structural checks that go with them.
//
// All weights are doubled epsilon coordinates (G weights for lambda, K
// weights for mu, M weights for projections).
#pragma once

#include "gelfand/branching.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gelfand {

// Multiplicity oracle for well computations: the Lepowsky rule for the
// symplectic pairs, otherwise the Kostant sum in the pair's last chamber
// (closed forms where available). Single owner.
class WellContext {
public:
    explicit WellContext(const PairDescriptor& pair);
    const PairDescriptor& pair() const { return *pair_; }
    // 0 when lambda is not G-dominant.
    long long multiplicity(const IVec& lambda, const IVec& mu);
    long long queries() const { return queries_; }

private:
    const PairDescriptor* pair_;
    KostantBrancher kb_;
    std::optional<PartitionFunction> sigma_;
    long long queries_ = 0;
};

struct Well {
    IVec mu;
    IVec spherical;
    std::set<IVec> bottom;
    // lambda in the spectrum with lambda + lambda_sph outside it (expected empty).
    std::vector<IVec> closure_failures;
    int box = 0;   // bound on the fundamental coordinates of line bases
    int walk = 0;  // number of lambda_sph steps searched per line

    bool contains(const IVec& lambda) const { return find_degree(lambda).has_value(); }
    // lambda_sph steps above the bottom element of lambda's line; throws
    // std::invalid_argument outside the spectrum.
    int degree(const IVec& lambda) const;
    std::optional<int> find_degree(const IVec& lambda) const;
};

struct WellOptions {
    int box = -1;   // default: sum of the K fundamental coordinates of mu
    int walk = -1;  // default: 2 * box + 4
};

// Sweeps every lambda_sph-line whose base lies in the box and records the
// first spectrum point on it.
Well compute_well(WellContext& ctx, const IVec& mu, WellOptions opt = {});
// Well whose bottom is bottom_closed_form; no sweep.
Well closed_form_well(const PairDescriptor& pair, const IVec& mu);

// lambda -> multiplicity for every spectrum point of degree <= degree_bound.
// With use_closed_form the bottom comes from bottom_closed_form.
std::map<IVec, long long> induced_spectrum(WellContext& ctx, const IVec& mu, int degree_bound,
                                           bool use_closed_form = false);

// Explicit bottoms for spin7-g2, g2-su3, sp-n, f4-spin9, so-odd-n and so-even-n.
// Throws std::invalid_argument for mu off the multiplicity free faces or for
// pairs without the data.
std::set<IVec> bottom_closed_form(const PairDescriptor& pair, const IVec& mu);
// Symplectic bottom by direct minimization of d along each line.
std::set<IVec> sp_bottom_by_minimization(const PairDescriptor& pair, const IVec& mu);

IVec project_to_M(const PairDescriptor& pair, const IVec& lambda);

// Multiplicities of M-types in the K-type mu (doubled M weights).
std::map<IVec, long long> km_table(const PairDescriptor& pair, const IVec& mu);

struct DegreeViolation {
    IVec lambda, shift;
    int d = 0, d_shifted = 0;
};

struct DegreeReport {
    long long checked = 0;
    std::vector<DegreeViolation> violations;
    // (lambda, shift) with lambda + shift outside lambda - lambda_sph <= . <= lambda + lambda_sph.
    std::vector<std::pair<IVec, IVec>> sandwich_failures;
    bool ok() const { return violations.empty() && sandwich_failures.empty(); }
};

// For lambda of degree <= degree_bound and lambda' a weight of V_{lambda_sph}
// with lambda + lambda' in the spectrum: |d(lambda + lambda') - d(lambda)| <= 1.
DegreeReport check_degree_inequality(WellContext& ctx, const Well& well, int degree_bound);

struct BijectionReport {
    std::set<IVec> bottom;
    std::map<IVec, IVec> image;  // bottom element -> M weight
    std::set<IVec> m_spectrum;   // P_M^+(mu)
    std::vector<std::pair<IVec, IVec>> collisions;
    std::vector<IVec> missing;   // in P_M^+(mu), not hit
    std::vector<IVec> outside;   // images outside P_M^+(mu)
    bool ok() const { return collisions.empty() && missing.empty() && outside.empty(); }
};

BijectionReport check_bottom_bijection(const PairDescriptor& pair, const IVec& mu);

struct StabilizationReport {
    std::vector<long long> values;  // m_{lambda + k lambda_sph}(mu), k = 0..steps
    bool monotone = true;
    int bound = 0;                  // first k after which the values are constant
    long long limit = 0;
    std::optional<long long> km_value;  // m^{K,M}_mu(p(lambda)) when M data exists
};

StabilizationReport check_stabilization(WellContext& ctx, const IVec& lambda, const IVec& mu, int steps);

}  // namespace gelfand
