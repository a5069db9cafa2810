#include "gelfand/wells.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gelfand {

namespace {

bool dominant_d(const RootSystem& rs, const IVec& v) {
    for (int i = 0; i < rs.rank; ++i)
        if (rs.coroot_pairing(v, i) < 0) return false;
    return true;
}

std::vector<long long> k_coords(const PairDescriptor& pair, const IVec& mu) {
    auto c = to_fundamental(pair.K, pair.K.weight(mu));
    c.resize(pair.K.rank);
    return c;
}

void require_k_dominant(const PairDescriptor& pair, const IVec& mu) {
    if (!dominant_d(pair.K, mu)) throw std::invalid_argument("mu is not K-dominant");
}

IVec g_weight(const PairDescriptor& pair, std::vector<long long> f) {
    f.resize(pair.G.fundamental.size() + pair.G.central.size(), 0);
    return from_fundamental(pair.G, f).d;
}

// Calls f on every vector of [0, bound]^n.
template <class F>
void for_box(int n, int bound, F&& f) {
    std::vector<long long> v(n, 0);
    while (true) {
        f(v);
        int i = 0;
        while (i < n && v[i] == bound) v[i++] = 0;
        if (i == n) return;
        ++v[i];
    }
}

// Step count k with v = k * dir, k >= 0, if any.
std::optional<int> steps_along(const IVec& v, const IVec& dir) {
    std::size_t i = 0;
    while (i < dir.size() && dir[i] == 0) ++i;
    if (i == dir.size()) return std::nullopt;
    if (v[i] % dir[i] != 0) return std::nullopt;
    const int k = v[i] / dir[i];
    if (k < 0 || scale(k, dir) != v) return std::nullopt;
    return k;
}

const PairDescriptor& g2_su3_static() {
    static const PairDescriptor p = make_pair_descriptor("g2-su3");
    return p;
}

// Interlacing enumeration in doubled coordinates: x_i in [lo_i, hi_i] with the
// parity of `parity`.
void interlace(const std::vector<std::pair<int, int>>& ranges, int parity, IVec& cur, std::size_t i,
               std::vector<IVec>& out) {
    if (i == ranges.size()) {
        out.push_back(cur);
        return;
    }
    int lo = ranges[i].first;
    if (((lo - parity) % 2 + 2) % 2 != 0) ++lo;
    for (int x = lo; x <= ranges[i].second; x += 2) {
        cur.push_back(x);
        interlace(ranges, parity, cur, i + 1, out);
        cur.pop_back();
    }
}

std::set<IVec> spin7_bottom(const PairDescriptor& pair, const std::vector<long long>& f) {
    std::set<IVec> out;
    const long long m1 = f[0], m2 = f[1];
    if (m2 == 0) {
        for (long long k = 0; k <= m1; ++k)
            for (long long l = 0; k + l <= m1; ++l) out.insert(g_weight(pair, {k, l, m1 - k - l}));
    } else if (m1 == 0) {
        const long long n = m2;
        for (long long m = 0; m <= n; ++m)
            for (long long k = m; k <= n; ++k) out.insert(g_weight(pair, {k, n - m, m}));
    } else {
        throw std::invalid_argument("spin7-g2: mu is off the faces n0 and 0n");
    }
    return out;
}

std::set<IVec> g2_bottom(const PairDescriptor& pair, const std::vector<long long>& f) {
    if (f[0] != 0 && f[1] != 0) throw std::invalid_argument("g2-su3: mu is off the faces of omega1 and omega2");
    const long long n = f[0] + f[1];
    std::set<IVec> out;
    for (long long k = 0; k <= n; ++k) out.insert(g_weight(pair, {k, n - k}));
    return out;
}

std::set<IVec> f4_bottom(const PairDescriptor& pair, const std::vector<long long>& f) {
    if (!pair.faces.admits(f, 4)) throw std::invalid_argument("f4-spin9: mu is off the multiplicity free faces");
    const IVec mu{int(f[0]), int(f[1]), int(f[2]), int(f[3])};
    const int s = mu[0] + mu[1] + mu[2] + mu[3];
    std::set<IVec> out;
    for (int l2 = 0; l2 <= s; ++l2)
        for (int l3 = 0; l3 <= s; ++l3)
            for (int l4 = 0; l4 <= s; ++l4) {
                if (!branch_spin9_spin7(mu, {l4, l3, l2})) continue;
                int l1;
                if (mu[2] == 0 && mu[3] == 0)
                    l1 = mu[0] + mu[1] - l2 - l3 - l4;
                else if (mu[2] != 0)
                    l1 = mu[2] - l2 - l3;
                else
                    l1 = mu[3] - l2 - l4;
                if (l1 >= 0) out.insert(g_weight(pair, {l1, l2, l3, l4}));
            }
    return out;
}

// Plain epsilon coordinates from doubled ones (integral lattices only).
std::vector<long long> halve(const IVec& v) {
    std::vector<long long> out;
    for (int x : v) {
        if (x % 2 != 0) throw std::logic_error("expected an integral weight");
        out.push_back(x / 2);
    }
    return out;
}

// Bottom element on the line of the M weight nu, for 2d = t.
IVec sp_line_point(const IVec& nu, int t) {
    const int m0 = nu[0] / 2;  // a1 - a2
    IVec lam{m0 + t, t - m0};
    lam.insert(lam.end(), nu.begin() + 1, nu.end());
    return lam;
}

std::set<IVec> sp_bottom(const PairDescriptor& pair, const IVec& mu) {
    const int n = pair.n;
    const auto f = k_coords(pair, mu);
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (f[i] != 0) support.push_back(i + 1);
    if (support.size() > 2) throw std::invalid_argument("sp-n: mu is not on a face of rank <= 2");
    const auto b = halve(mu);
    std::set<IVec> out;
    for (const auto& [nu, m] : km_table(pair, mu)) {
        if (m <= 0) continue;
        const int m0 = nu[0] / 2;
        long long t;
        if (support.empty() || support[0] > 1) {
            t = m0 + 2 * b[0];
        } else {
            const auto a_rest = halve(IVec(nu.begin() + 1, nu.end()));
            std::vector<long long> a{0, 0};
            a.insert(a.end(), a_rest.begin(), a_rest.end());
            long long B = 0;
            if (support.size() == 2) {
                const int j = support[1];
                B = j == n ? f[n - 1] : lepowsky_data(a, b).A[j];  // A_{j+1}
            }
            t = b[0] + B + std::max(a[2], b[1]);
        }
        if ((t + m0) % 2 != 0) throw std::logic_error("sp bottom formula left the weight lattice");
        out.insert(sp_line_point(nu, static_cast<int>(t)));
    }
    return out;
}

std::set<IVec> so_bottom(const PairDescriptor& pair, const IVec& mu) {
    const int n = pair.n;
    const int parity = ((mu[0] % 2) + 2) % 2;
    std::vector<std::pair<int, int>> ranges;
    if (pair.kind == PairKind::so_odd) {
        // a1 = b1 >= a2 >= b2 >= ... >= a_n >= |b_n|.
        for (int i = 1; i + 1 < n; ++i) ranges.push_back({mu[i], mu[i - 1]});
        ranges.push_back({std::abs(mu[n - 1]), mu[n - 2]});
    } else {
        // a1 = b1 >= a2 >= ... >= a_{n-1} >= b_{n-1} >= |a_n|.
        for (int i = 1; i + 1 < n; ++i) ranges.push_back({mu[i], mu[i - 1]});
        ranges.push_back({-mu[n - 2], mu[n - 2]});
    }
    std::vector<IVec> tails;
    IVec cur;
    interlace(ranges, parity, cur, 0, tails);
    std::set<IVec> out;
    for (auto& t : tails) {
        IVec lam{mu[0]};
        lam.insert(lam.end(), t.begin(), t.end());
        out.insert(lam);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- context

WellContext::WellContext(const PairDescriptor& pair)
    : pair_(&pair), kb_(pair, static_cast<int>(pair.chambers.size()) - 1) {
    if (pair.kind == PairKind::sp_n) sigma_.emplace(sp_sigma_set(pair.n));
}

long long WellContext::multiplicity(const IVec& lambda, const IVec& mu) {
    if (!dominant_d(pair_->G, lambda)) return 0;
    ++queries_;
    if (sigma_) return branch_sp_lepowsky(pair_->n, halve(lambda), halve(mu), &*sigma_);
    return kb_(lambda, mu);
}

// ---------------------------------------------------------------- wells

std::optional<int> Well::find_degree(const IVec& lambda) const {
    for (const auto& b : bottom)
        if (auto k = steps_along(sub(lambda, b), spherical)) return k;
    return std::nullopt;
}

int Well::degree(const IVec& lambda) const {
    if (auto k = find_degree(lambda)) return *k;
    throw std::invalid_argument("degree: lambda is outside the induced spectrum");
}

Well compute_well(WellContext& ctx, const IVec& mu, WellOptions opt) {
    const auto& pair = ctx.pair();
    require_k_dominant(pair, mu);
    const auto f = k_coords(pair, mu);
    const long long size = std::accumulate(f.begin(), f.end(), 0LL);
    Well w;
    w.mu = mu;
    w.spherical = pair.lambda_sph;
    w.box = opt.box >= 0 ? opt.box : static_cast<int>(size);
    w.walk = opt.walk >= 0 ? opt.walk : 2 * w.box + 4;
    for_box(pair.G.rank, w.box, [&](const std::vector<long long>& c) {
        const IVec base = g_weight(pair, c);
        if (dominant_d(pair.G, sub(base, pair.lambda_sph))) return;  // not the base of its line
        int first = -1;
        for (int k = 0; k <= w.walk; ++k) {
            const IVec lam = add(base, scale(k, pair.lambda_sph));
            const long long m = ctx.multiplicity(lam, mu);
            if (first < 0 && m > 0) {
                first = k;
                w.bottom.insert(lam);
            } else if (first >= 0 && m == 0) {
                w.closure_failures.push_back(sub(lam, pair.lambda_sph));
            }
        }
    });
    return w;
}

Well closed_form_well(const PairDescriptor& pair, const IVec& mu) {
    Well w;
    w.mu = mu;
    w.spherical = pair.lambda_sph;
    w.bottom = bottom_closed_form(pair, mu);
    return w;
}

std::map<IVec, long long> induced_spectrum(WellContext& ctx, const IVec& mu, int degree_bound,
                                           bool use_closed_form) {
    const Well w = use_closed_form ? closed_form_well(ctx.pair(), mu) : compute_well(ctx, mu);
    std::map<IVec, long long> out;
    for (const auto& b : w.bottom)
        for (int k = 0; k <= degree_bound; ++k) {
            const IVec lam = add(b, scale(k, w.spherical));
            const long long m = ctx.multiplicity(lam, mu);
            if (m <= 0) throw std::logic_error("induced_spectrum: line leaves the spectrum above its bottom");
            out[lam] = m;
        }
    return out;
}

std::set<IVec> bottom_closed_form(const PairDescriptor& pair, const IVec& mu) {
    require_k_dominant(pair, mu);
    switch (pair.kind) {
        case PairKind::spin7_g2: return spin7_bottom(pair, k_coords(pair, mu));
        case PairKind::g2_su3: return g2_bottom(pair, k_coords(pair, mu));
        case PairKind::f4_spin9: return f4_bottom(pair, k_coords(pair, mu));
        case PairKind::sp_n: return sp_bottom(pair, mu);
        case PairKind::so_odd:
        case PairKind::so_even: return so_bottom(pair, mu);
        case PairKind::su_n: break;
    }
    throw std::invalid_argument("no closed-form bottom for " + pair.id);
}

std::set<IVec> sp_bottom_by_minimization(const PairDescriptor& pair, const IVec& mu) {
    if (pair.kind != PairKind::sp_n) throw std::invalid_argument("sp_bottom_by_minimization: symplectic pairs only");
    require_k_dominant(pair, mu);
    const auto b = halve(mu);
    const long long size = std::accumulate(b.begin(), b.end(), 0LL);
    PartitionFunction sigma(sp_sigma_set(pair.n));
    std::set<IVec> out;
    for (const auto& [nu, m] : km_table(pair, mu)) {
        if (m <= 0) continue;
        const int m0 = nu[0] / 2;
        const int start = m0 + std::max(nu.size() > 1 ? nu[1] : 0, 0);
        bool found = false;
        for (int t = start; t <= start + 4 * size + 8; t += 2) {
            const IVec lam = sp_line_point(nu, t);
            if (branch_sp_lepowsky(pair.n, halve(lam), b, &sigma) > 0) {
                out.insert(lam);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("sp_bottom_by_minimization: no spectrum point on an M-type line");
    }
    return out;
}

IVec project_to_M(const PairDescriptor& pair, const IVec& lambda) {
    if (!pair.project) throw std::invalid_argument("no projection to M for " + pair.id);
    return pair.project(lambda);
}

std::map<IVec, long long> km_table(const PairDescriptor& pair, const IVec& mu) {
    if (!pair.M) throw std::invalid_argument("no M data for " + pair.id);
    require_k_dominant(pair, mu);
    std::map<IVec, long long> out;
    switch (pair.kind) {
        case PairKind::spin7_g2: {
            // M = SU(3) inside G2: the G2 > SU(3) rule itself.
            KostantBrancher kb(g2_su3_static());
            return kostant_table(kb, mu).entries;
        }
        case PairKind::g2_su3: {
            const auto f = k_coords(pair, mu);
            for (long long n2 = 0; n2 <= f[0] + f[1]; ++n2)
                if (long long m = branch_su3_su2(f[0], f[1], n2); m > 0) out[IVec{int(2 * n2)}] = m;
            return out;
        }
        case PairKind::f4_spin9: {
            const auto f = k_coords(pair, mu);
            if (pair.faces.admits(f, 4)) {
                const IVec fm{int(f[0]), int(f[1]), int(f[2]), int(f[3])};
                for (const auto& nu : spin9_spin7_spectrum(fm))
                    out[from_fundamental(*pair.M, {nu[0], nu[1], nu[2]}).d] = 1;
                return out;
            }
            break;
        }
        default: break;
    }
    CharacterCache cache(*pair.M);
    return branch_oracle(pair.K, *pair.M, pair.k_to_m, mu, cache).entries;
}

// ---------------------------------------------------------------- checks

DegreeReport check_degree_inequality(WellContext& ctx, const Well& well, int degree_bound) {
    const auto& pair = ctx.pair();
    const auto& G = pair.G;
    DegreeReport r;
    std::vector<IVec> shifts;
    for (const auto& [v, m] : weight_multiplicities(G, G.weight(pair.lambda_sph))) shifts.push_back(v);
    for (const auto& b : well.bottom)
        for (int d = 0; d <= degree_bound; ++d) {
            const IVec lam = add(b, scale(d, well.spherical));
            const Weight lo = G.weight(sub(lam, well.spherical)), hi = G.weight(add(lam, well.spherical));
            for (const auto& s : shifts) {
                const IVec v = add(lam, s);
                if (!dominant_d(G, v)) continue;
                auto ds = well.find_degree(v);
                if (!ds) {
                    // Outside the stored well: either outside the spectrum or a missed line.
                    if (ctx.multiplicity(v, well.mu) > 0) r.violations.push_back({lam, s, d, -1});
                    continue;
                }
                ++r.checked;
                if (std::abs(*ds - d) > 1) r.violations.push_back({lam, s, d, *ds});
                if (!dominance_leq(G, lo, G.weight(v)) || !dominance_leq(G, G.weight(v), hi))
                    r.sandwich_failures.push_back({lam, s});
            }
        }
    return r;
}

BijectionReport check_bottom_bijection(const PairDescriptor& pair, const IVec& mu) {
    BijectionReport r;
    r.bottom = bottom_closed_form(pair, mu);
    for (const auto& [nu, m] : km_table(pair, mu))
        if (m > 0) r.m_spectrum.insert(nu);
    std::map<IVec, IVec> seen;
    for (const auto& b : r.bottom) {
        const IVec img = project_to_M(pair, b);
        r.image[b] = img;
        if (auto [it, fresh] = seen.emplace(img, b); !fresh) r.collisions.push_back({it->second, b});
        if (!r.m_spectrum.count(img)) r.outside.push_back(b);
    }
    for (const auto& nu : r.m_spectrum)
        if (!seen.count(nu)) r.missing.push_back(nu);
    return r;
}

StabilizationReport check_stabilization(WellContext& ctx, const IVec& lambda, const IVec& mu, int steps) {
    const auto& pair = ctx.pair();
    StabilizationReport r;
    for (int k = 0; k <= steps; ++k) r.values.push_back(ctx.multiplicity(add(lambda, scale(k, pair.lambda_sph)), mu));
    for (int k = 1; k <= steps; ++k)
        if (r.values[k] < r.values[k - 1]) r.monotone = false;
    r.limit = r.values.back();
    r.bound = steps;
    while (r.bound > 0 && r.values[r.bound - 1] == r.limit) --r.bound;
    if (pair.M && pair.project) {
        const auto t = km_table(pair, mu);
        auto it = t.find(project_to_M(pair, lambda));
        r.km_value = it == t.end() ? 0 : it->second;
    }
    return r;
}

}  // namespace gelfand
