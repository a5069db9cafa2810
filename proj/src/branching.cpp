#include "gelfand/branching.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gelfand {

// ---------------------------------------------------------------- linear maps

LinearMap LinearMap::identity(int n) {
    LinearMap m;
    m.src_dim = n;
    for (int i = 0; i < n; ++i) {
        IVec r(n, 0);
        r[i] = 1;
        m.rows.push_back(r);
    }
    return m;
}

IVec LinearMap::apply(const IVec& v) const {
    if (static_cast<int>(v.size()) != src_dim) throw lattice_error("LinearMap: source dimension mismatch");
    IVec out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const long long s = dot(rows[i], v);
        if (s % divisor != 0) throw lattice_error("LinearMap: image outside the target lattice");
        out[i] = static_cast<int>(s / divisor);
    }
    return out;
}

namespace {

LinearMap from_rational(const RatMat& m, int src_dim) {
    long long den = 1;
    for (const auto& row : m)
        for (const auto& x : row) den = std::lcm(den, x.denominator());
    LinearMap out;
    out.src_dim = src_dim;
    out.divisor = static_cast<int>(den);
    for (const auto& row : m) {
        IVec r;
        for (const auto& x : row) r.push_back(static_cast<int>((x * den).numerator()));
        out.rows.push_back(r);
    }
    return out;
}

RatMat to_rational(const LinearMap& m) {
    RatMat out;
    for (const auto& row : m.rows) {
        RatVec r;
        for (int x : row) r.emplace_back(x, m.divisor);
        out.push_back(r);
    }
    return out;
}

// q composed with a Weyl element, as one integer map.
LinearMap compose(const LinearMap& q, const WeylElement& w) {
    return from_rational(matmul(to_rational(q), w.matrix()), w.dim());
}

// Coordinate projection forgetting coordinate `skip` of Z^n.
LinearMap drop_coordinate(int n, int skip) {
    LinearMap m;
    m.src_dim = n;
    for (int i = 0; i < n; ++i) {
        if (i == skip) continue;
        IVec r(n, 0);
        r[i] = 1;
        m.rows.push_back(r);
    }
    return m;
}

std::vector<long long> to_ll(const IVec& v) { return {v.begin(), v.end()}; }

IVec from_fund(const RootSystem& rs, const IVec& coords) { return from_fundamental(rs, to_ll(coords)).d; }

bool dominant_d(const RootSystem& rs, const IVec& v) {
    for (int i = 0; i < rs.rank; ++i)
        if (rs.coroot_pairing(v, i) < 0) return false;
    return true;
}

VectorMultiset compute_a_set(const RootSystem& G, const RootSystem& K, const LinearMap& q,
                             const WeylElement& wt, const IVec& rho) {
    std::multiset<IVec> pool;
    for (const auto& a : G.positive) pool.insert(q.apply(wt.apply(a)));
    for (const auto& b : K.positive) {
        auto it = pool.find(b);
        if (it == pool.end())
            throw std::logic_error("restriction does not carry the chosen G chamber over R_K^+");
        pool.erase(it);
    }
    std::vector<IVec> rest(pool.begin(), pool.end());
    for (const auto& a : rest)
        if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; }))
            throw std::logic_error("restriction kills a root; partition function would be infinite");
    return VectorMultiset::with_found_witness(std::move(rest), {q.apply(rho), K.rho});
}

Chamber make_chamber(std::string name, const RootSystem& G, const RootSystem& K, const LinearMap& q,
                     const WeylElement& wt) {
    IVec rho = wt.apply(G.rho);
    VectorMultiset a = compute_a_set(G, K, q, wt, rho);
    return Chamber{std::move(name), wt, std::move(rho), std::move(a), {}, {}};
}

// Chamber's a_set must be the given multiset; used to tie closed forms to data.
void expect_same_set(const Chamber& c, const VectorMultiset& expected) {
    auto a = c.a_set.vectors(), b = expected.vectors();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::logic_error("chamber " + c.name + ": A set differs from the closed-form set");
}

int parse_n(std::string_view tail, int fallback) {
    if (tail.empty()) return fallback;
    int n = 0;
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || p != tail.data() + tail.size())
        throw std::invalid_argument("bad rank in pair identifier");
    return n;
}

const WeylElement& find_in_weyl(const RootSystem& rs, const RatMat& m) {
    for (const auto& w : rs.weyl_group())
        if (w.matrix() == m) return w;
    throw std::logic_error("matrix is not in the Weyl group of " + rs.label);
}

// ---- pair builders

PairDescriptor spin7_g2() {
    PairDescriptor p;
    p.id = "spin7-g2";
    p.kind = PairKind::spin7_g2;
    p.G = build_root_system("B3", Lattice::G);
    p.K = build_root_system("G2", Lattice::K);
    // e1 -> eps1 = (0,-1,1), e2 -> eps2 = (-1,0,1), e3 -> eps3 = (1,-1,0).
    p.q.src_dim = 3;
    p.q.rows = {{0, -1, 1}, {-1, 0, -1}, {1, 1, 0}};
    p.lambda_sph = p.G.fundamental[2];
    Chamber c = make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(3));
    expect_same_set(c, spin7_a_set());
    c.closed = partition_spin7_closed;
    c.support = spin7_support;
    p.chambers.push_back(std::move(c));
    p.faces.faces = {{0}, {1}};
    // M = SU(3) on the long roots, fundamental weights eps1, eps2.
    p.M = root_system_from_simple("A2long", 3, {{2, -4, 2}, {-4, 2, 2}}, {{0, -2, 2}, {-2, 0, 2}}, {},
                                  Lattice::M);
    p.k_to_m = LinearMap::identity(3);
    const RootSystem G = p.G, M = *p.M;
    p.project = [G, M](const IVec& lambda) {
        auto f = to_fundamental(G, G.weight(lambda));
        return from_fundamental(M, {f[0], f[1]}).d;
    };
    return p;
}

PairDescriptor g2_su3() {
    PairDescriptor p;
    p.id = "g2-su3";
    p.kind = PairKind::g2_su3;
    p.G = build_root_system("G2", Lattice::G);
    p.K = root_system_from_simple("A2long", 3, {{2, -4, 2}, {-4, 2, 2}}, {{0, -2, 2}, {-2, 0, 2}}, {},
                                  Lattice::K);
    p.q = LinearMap::identity(3);
    p.lambda_sph = p.G.fundamental[0];
    p.chambers.push_back(make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(3)));
    p.faces.faces = {{0}, {1}};
    // M = SU(2) on +-alpha2; label <mu, alpha2^vee>, doubled.
    p.M = build_root_system("C1", Lattice::M);
    p.k_to_m.src_dim = 3;
    p.k_to_m.rows = {{-2, 1, 1}};
    p.k_to_m.divisor = 3;
    const LinearMap km = p.k_to_m;
    p.project = [km](const IVec& lambda) { return km.apply(lambda); };
    return p;
}

PairDescriptor f4_spin9() {
    PairDescriptor p;
    p.id = "f4-spin9";
    p.kind = PairKind::f4_spin9;
    p.G = build_root_system("F4", Lattice::G);
    p.K = build_root_system("B4", Lattice::K);
    p.q = LinearMap::identity(4);
    p.lambda_sph = p.G.fundamental[0];
    Chamber std_c = make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(4));
    expect_same_set(std_c, f4_a_set());
    std_c.closed = partition_f4_A_closed;
    std_c.support = f4_A_support;
    p.chambers.push_back(std::move(std_c));
    Chamber alt = make_chamber("translated", p.G, p.K, p.q, f4_translating_element());
    expect_same_set(alt, f4_b_set());
    alt.closed = partition_f4_B_closed;
    alt.support = f4_B_support;
    p.chambers.push_back(std::move(alt));
    p.faces.faces = {{0, 1}, {2}, {3}};
    // M = Spin(7) with simple roots delta1 = eps3-eps4, delta2 = eps2-eps3,
    // delta3 = 1/2(eps1-eps2+eps3+eps4), modelled as B3 through nu_j = <mu, delta_j^vee>.
    p.M = build_root_system("B3", Lattice::M);
    const std::vector<IVec> delta{{0, 0, 2, -2}, {0, 2, -2, 0}, {1, -1, 1, 1}};
    RatMat km(3, RatVec(4));
    for (int k = 0; k < 3; ++k)
        for (int t = 0; t < 4; ++t)
            for (int j = 0; j < 3; ++j)
                km[k][t] += Rat(p.M->fundamental[j][k]) * Rat(2 * delta[j][t], dot(delta[j], delta[j]));
    p.k_to_m = from_rational(km, 4);
    const LinearMap kmap = p.k_to_m;
    const WeylElement wm = f4_w_m();
    p.project = [kmap, wm](const IVec& lambda) { return kmap.apply(wm.apply(lambda)); };
    return p;
}

PairDescriptor sp_pair(int n) {
    if (n < 3) throw std::invalid_argument("sp-n needs n >= 3");
    PairDescriptor p;
    p.id = "sp-" + std::to_string(n);
    p.kind = PairKind::sp_n;
    p.n = n;
    p.G = build_root_system("C" + std::to_string(n), Lattice::G);
    p.K = build_root_system("C" + std::to_string(n - 1) + "xC1", Lattice::K);
    p.q = LinearMap::identity(n);
    p.lambda_sph = p.G.fundamental[1];
    Chamber c = make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(n));
    expect_same_set(c, sp_sigma_set(n));
    p.chambers.push_back(std::move(c));
    p.faces.max_rank = 2;
    // M = Sp(2)_diag x Sp(2n-4): (b1 + bn; b2, ..., b_{n-1}).
    p.M = build_root_system("C1xC" + std::to_string(n - 2), Lattice::M);
    p.k_to_m.src_dim = n;
    IVec r0(n, 0);
    r0[0] = 1;
    r0[n - 1] = 1;
    p.k_to_m.rows.push_back(r0);
    for (int i = 1; i < n - 1; ++i) {
        IVec r(n, 0);
        r[i] = 1;
        p.k_to_m.rows.push_back(r);
    }
    // p(lambda) = (a1 - a2; a3, ..., an).
    p.project = [n](const IVec& a) {
        IVec out{a[0] - a[1]};
        for (int i = 2; i < n; ++i) out.push_back(a[i]);
        return out;
    };
    return p;
}

PairDescriptor so_odd(int n) {
    if (n < 3) throw std::invalid_argument("so-odd-n needs n >= 3");
    PairDescriptor p;
    p.id = "so-odd-" + std::to_string(n);
    p.kind = PairKind::so_odd;
    p.n = n;
    p.G = build_root_system("B" + std::to_string(n), Lattice::G);
    p.K = build_root_system("D" + std::to_string(n), Lattice::K);
    p.q = LinearMap::identity(n);
    p.lambda_sph = p.G.fundamental[0];
    p.chambers.push_back(make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(n)));
    p.M = build_root_system("B" + std::to_string(n - 1), Lattice::M);
    p.k_to_m = drop_coordinate(n, n - 1);
    p.project = [](const IVec& a) { return IVec(a.begin() + 1, a.end()); };
    return p;
}

PairDescriptor so_even(int n) {
    if (n < 3) throw std::invalid_argument("so-even-n needs n >= 3");
    PairDescriptor p;
    p.id = "so-even-" + std::to_string(n);
    p.kind = PairKind::so_even;
    p.n = n;
    p.G = build_root_system("D" + std::to_string(n), Lattice::G);
    p.K = build_root_system("B" + std::to_string(n - 1), Lattice::K);
    p.q = drop_coordinate(n, n - 1);
    p.lambda_sph = p.G.fundamental[0];
    p.chambers.push_back(make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(n)));
    p.M = build_root_system("D" + std::to_string(n - 1), Lattice::M);
    p.k_to_m = LinearMap::identity(n - 1);
    p.project = [](const IVec& a) { return IVec(a.begin() + 1, a.end()); };
    return p;
}

PairDescriptor su_pair(int n) {
    if (n < 2) throw std::invalid_argument("su-n needs n >= 2");
    PairDescriptor p;
    p.id = "su-" + std::to_string(n);
    p.kind = PairKind::su_n;
    p.n = n;
    p.G = build_root_system("A" + std::to_string(n), Lattice::G);
    p.K = build_root_system("A" + std::to_string(n - 1), Lattice::K);
    // U(n) weights (a_i - a_{n+1}).
    p.q.src_dim = n + 1;
    for (int i = 0; i < n; ++i) {
        IVec r(n + 1, 0);
        r[i] = 1;
        r[n] = -1;
        p.q.rows.push_back(r);
    }
    p.lambda_sph = add(p.G.fundamental[0], p.G.fundamental[n - 1]);
    p.chambers.push_back(make_chamber("standard", p.G, p.K, p.q, WeylElement::identity(n + 1)));
    return p;
}

}  // namespace

bool FaceRule::admits(const std::vector<long long>& mu, int k_rank) const {
    std::vector<int> support;
    for (int i = 0; i < k_rank && i < static_cast<int>(mu.size()); ++i)
        if (mu[i] != 0) support.push_back(i);
    if (static_cast<int>(support.size()) > max_rank) return false;
    if (faces.empty()) return true;
    for (const auto& f : faces)
        if (std::all_of(support.begin(), support.end(),
                        [&](int i) { return std::find(f.begin(), f.end(), i) != f.end(); }))
            return true;
    return false;
}

PairDescriptor make_pair_descriptor(std::string_view id, int default_n) {
    if (id == "spin7-g2") return spin7_g2();
    if (id == "g2-su3") return g2_su3();
    if (id == "f4-spin9") return f4_spin9();
    auto starts = [&](std::string_view pre) { return id.substr(0, pre.size()) == pre; };
    auto tail = [&](std::string_view pre) {
        std::string_view t = id.substr(pre.size());
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        return parse_n(t, default_n);
    };
    if (starts("so-odd")) return so_odd(tail("so-odd"));
    if (starts("so-even")) return so_even(tail("so-even"));
    if (starts("sp-") || id == "sp") return sp_pair(tail("sp"));
    if (starts("su-") || id == "su") return su_pair(tail("su"));
    throw std::invalid_argument("unknown pair identifier: " + std::string(id));
}

std::vector<std::string> pair_identifiers() {
    return {"su-n", "so-odd-n", "so-even-n", "sp-n", "f4-spin9", "spin7-g2", "g2-su3"};
}

// ---------------------------------------------------------------- Kostant sum

KostantBrancher::KostantBrancher(const PairDescriptor& pair, int chamber, bool use_closed)
    : pair_(&pair),
      chamber_(&pair.chambers.at(static_cast<std::size_t>(chamber))),
      use_closed_(use_closed && static_cast<bool>(pair.chambers.at(chamber).closed)),
      generic_(pair.chambers.at(chamber).a_set) {
    const auto& ws = pair.G.weyl_group();
    maps_.reserve(ws.size());
    for (const auto& w : ws) {
        maps_.push_back(compose(pair.q, w * chamber_->to_chamber));
        offsets_.push_back(pair.q.apply(sub(w.apply(chamber_->rho), chamber_->rho)));
        det_.push_back(w.det());
    }
}

long long KostantBrancher::operator()(const IVec& lambda, const IVec& mu, KostantStats* stats) {
    const IVec& h = chamber_->a_set.witness();
    long long total = 0;
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        IVec v = sub(add(maps_[i].apply(lambda), offsets_[i]), mu);
        if (stats) ++stats->terms;
        long long p = 0;
        if (use_closed_) {
            if (chamber_->support && !chamber_->support(v)) continue;
            if (stats) stats->survivors.push_back(static_cast<int>(i));
            p = chamber_->closed(v);
        } else {
            if (dot(h, v) < 0) continue;
            if (stats) stats->survivors.push_back(static_cast<int>(i));
            p = generic_(v);
        }
        if (stats) ++stats->evaluated;
        total += det_[i] * p;
    }
    return total;
}

long long branch_kostant(const PairDescriptor& pair, const IVec& lambda, const IVec& mu) {
    KostantBrancher kb(pair);
    return kb(lambda, mu);
}

// ---------------------------------------------------------------- tables

long long BranchingTable::dim_sum(const RootSystem& K) const {
    long long s = 0;
    for (const auto& [mu, m] : entries) s += m * static_cast<long long>(weyl_dim(K, K.weight(mu)));
    return s;
}

BranchingTable branch_oracle(const RootSystem& G, const RootSystem& K, const LinearMap& q,
                             const IVec& lambda, CharacterCache& k_chars, std::uint64_t dim_cap) {
    std::map<IVec, long long> residual;
    for (const auto& [w, m] : weight_multiplicities(G, G.weight(lambda), dim_cap)) residual[q.apply(w)] += m;
    BranchingTable t;
    t.lambda = lambda;
    const IVec two_rho = scale(2, K.rho);
    while (!residual.empty()) {
        auto top = residual.begin();
        long long best = dot(two_rho, top->first);
        for (auto it = residual.begin(); it != residual.end(); ++it) {
            const long long hgt = dot(two_rho, it->first);
            if (hgt > best || (hgt == best && it->first > top->first)) {
                best = hgt;
                top = it;
            }
        }
        const IVec mu = top->first;
        const long long mult = top->second;
        if (mult < 0 || !dominant_d(K, mu)) {
            std::ostringstream os;
            os << "branch_oracle: inconsistent residual at a " << (mult < 0 ? "negative" : "non-dominant")
               << " top weight for " << G.label << " -> " << K.label;
            throw std::logic_error(os.str());
        }
        t.entries[mu] = mult;
        for (const auto& [w, m] : k_chars.character(mu)) {
            auto it = residual.find(w);
            const long long left = (it == residual.end() ? 0 : it->second) - mult * m;
            if (left < 0) throw std::logic_error("branch_oracle: negative residual");
            if (left == 0) {
                if (it != residual.end()) residual.erase(it);
            } else {
                it->second = left;
            }
        }
    }
    return t;
}

BranchingTable branch_oracle(const PairDescriptor& pair, const IVec& lambda, std::uint64_t dim_cap) {
    CharacterCache cache(pair.K, dim_cap);
    return branch_oracle(pair.G, pair.K, pair.q, lambda, cache, dim_cap);
}

BranchingTable kostant_table(KostantBrancher& kb, const IVec& lambda, std::uint64_t dim_cap) {
    const auto& pair = kb.pair();
    std::set<IVec> candidates;
    for (const auto& [mu, m] : dominant_multiplicities(pair.G, pair.G.weight(lambda), dim_cap)) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(pair.G, mu)) {
            IVec v = pair.q.apply(w);
            if (dominant_d(pair.K, v)) candidates.insert(v);
        }
    }
    BranchingTable t;
    t.lambda = lambda;
    for (const auto& mu : candidates)
        if (long long m = kb(lambda, mu); m != 0) t.entries[mu] = m;
    return t;
}

// ---------------------------------------------------------------- Spin(7) > G2

namespace {

const PairDescriptor& spin7_pair_static() {
    static const PairDescriptor p = spin7_g2();
    return p;
}

// Weight multiplicity function of A2 assembled from six partition values.
long long spin7_six_terms(const IVec& klm, const IVec& nu) {
    const auto& pair = spin7_pair_static();
    const long long k = klm[0], l = klm[1], m = klm[2];
    const int X = static_cast<int>(2 * k + 2 * l + m), Y = static_cast<int>(2 * l + m), Z = static_cast<int>(m);
    const IVec rho = pair.G.rho;  // (5,3,1)
    const IVec lr{X + rho[0], Y + rho[1], Z + rho[2]};
    // w1..w4 on (x,y,z): (x,y,z), (x,y,-z), (x,z,-y), (x,-z,-y).
    const std::vector<std::pair<IVec, int>> ws{{{lr[0], lr[1], lr[2]}, 1},
                                               {{lr[0], lr[1], -lr[2]}, -1},
                                               {{lr[0], lr[2], -lr[1]}, 1},
                                               {{lr[0], -lr[2], -lr[1]}, -1}};
    const IVec e1{0, -2, 2}, e2{-2, 0, 2};
    long long total = 0;
    for (const auto& [w, sign] : ws)
        total += sign * partition_spin7_closed(sub(pair.q.apply(sub(w, rho)), nu));
    const IVec a = scale(static_cast<int>(k + l + m), e1), b = scale(static_cast<int>(k + l), e1);
    total -= partition_spin7_closed(sub(sub(a, e2), nu));
    total += partition_spin7_closed(sub(sub(sub(b, e1), e2), nu));
    return total;
}

}  // namespace

long long branch_spin7_g2(const IVec& klm, const IVec& mu) {
    const auto& pair = spin7_pair_static();
    if (klm.size() != 3 || mu.size() != 2) throw std::invalid_argument("branch_spin7_g2: expects klm and (m1,m2)");
    if (*std::min_element(klm.begin(), klm.end()) < 0)
        throw std::invalid_argument("branch_spin7_g2: lambda must be dominant");
    IVec mud = from_fund(pair.K, mu);
    int sign = 1;
    if (!dominant_d(pair.K, mud)) {
        auto sd = shifted_dominant(pair.K, mud);
        if (!sd) return 0;
        mud = sd->v;
        sign = sd->sign;
    }
    // s1 mu - eps3 = s1(mu + rho_K) - rho_K, s1 the reflection in beta1 = eps3.
    const IVec eps3{2, -2, 0};
    const IVec reflected = sub(pair.K.reflect(mud, 0), eps3);
    return sign * (spin7_six_terms(klm, mud) - spin7_six_terms(klm, reflected));
}

// ---------------------------------------------------------------- G2 > SU(3)

long long branch_g2_su3(const IVec& lambda, const IVec& mu) {
    static thread_local const PairDescriptor pair = g2_su3();
    static thread_local KostantBrancher kb(pair);
    return kb(from_fund(pair.G, lambda), from_fund(pair.K, mu));
}

long long g2_su3_min_formula(long long n2, long long m1, long long m2) {
    return std::max(0LL, std::min({m1 + 1, m2 + 1, m1 + m2 - n2 + 1, n2 + 1}));
}

long long branch_su3_su2(long long m1, long long m2, long long n2) {
    if (n2 < 0) return 0;
    return std::max(0LL, std::min({n2 + 1, std::min(m1, m2) + 1, m1 + m2 - n2 + 1}));
}

// ---------------------------------------------------------------- symplectic

LepowskyData lepowsky_data(const std::vector<long long>& a, const std::vector<long long>& b) {
    const std::size_t n = a.size();
    if (n < 3 || b.size() != n) throw std::invalid_argument("lepowsky_data: need n >= 3 coordinates");
    LepowskyData d;
    d.A.resize(n);
    d.A[0] = a[0] - std::max(a[1], b[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) d.A[k] = std::min(a[k], b[k - 1]) - std::max(a[k + 1], b[k]);
    d.A[n - 1] = std::min(a[n - 1], b[n - 2]);
    const long long sum = std::accumulate(d.A.begin(), d.A.end(), 0LL);
    d.gate = std::all_of(d.A.begin(), d.A.end(), [](long long x) { return x >= 0; }) && (b[n - 1] + sum) % 2 == 0;
    return d;
}

namespace {

void check_sp_dominant(int n, const std::vector<long long>& a, const std::vector<long long>& b) {
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("symplectic branching: wrong number of coordinates");
    for (int i = 0; i + 1 < n; ++i)
        if (a[i] < a[i + 1]) throw std::invalid_argument("symplectic branching: lambda not dominant");
    if (a[n - 1] < 0) throw std::invalid_argument("symplectic branching: lambda not dominant");
    for (int i = 0; i + 2 < n; ++i)
        if (b[i] < b[i + 1]) throw std::invalid_argument("symplectic branching: mu not dominant");
    if (b[n - 2] < 0 || b[n - 1] < 0) throw std::invalid_argument("symplectic branching: mu not dominant");
}

}  // namespace

long long branch_sp_lepowsky(int n, const std::vector<long long>& a, const std::vector<long long>& b,
                             PartitionFunction* sigma) {
    if (n < 3) throw std::invalid_argument("branch_sp_lepowsky: n >= 3 required");
    check_sp_dominant(n, a, b);
    const auto d = lepowsky_data(a, b);
    if (!d.gate) return 0;
    std::optional<PartitionFunction> local;
    if (!sigma) {
        local.emplace(sp_sigma_set(n));
        sigma = &*local;
    }
    IVec lo(n), hi(n);
    for (int i = 0; i + 1 < n; ++i) lo[i] = hi[i] = static_cast<int>(2 * d.A[i]);
    lo[n - 1] = static_cast<int>(2 * (d.A[n - 1] - b[n - 1]));
    hi[n - 1] = static_cast<int>(2 * (d.A[n - 1] + b[n - 1] + 2));
    return (*sigma)(lo) - (*sigma)(hi);
}

long long branch_sp_closed(int n, const std::vector<long long>& a, const std::vector<long long>& b) {
    if (n < 3) throw std::invalid_argument("branch_sp_closed: n >= 3 required");
    check_sp_dominant(n, a, b);
    int support = 0;
    for (int i = 0; i + 2 < n; ++i) support += (b[i] != b[i + 1]);
    support += (b[n - 2] != 0) + (b[n - 1] != 0);
    if (support > 2) throw std::invalid_argument("branch_sp_closed: mu is not on a face of rank <= 2");
    const auto d = lepowsky_data(a, b);
    for (int k = 0; k + 1 < n; ++k)
        if (d.A[k] < 0) return 0;
    const long long sum = std::accumulate(d.A.begin(), d.A.end(), 0LL) + b[n - 1];
    if (sum % 2 != 0) return 0;
    const long long top = std::max(*std::max_element(d.A.begin(), d.A.end()), b[n - 1]);
    return 2 * top <= sum ? 1 : 0;
}

// ---------------------------------------------------------------- F4 > Spin(9)

WeylElement f4_translating_element() {
    static const WeylElement w = [] {
        const RootSystem g = build_root_system("F4");
        const IVec target{9, 7, 5, 1};
        for (const auto& x : g.weyl_group())
            if (x.apply(g.rho) == target) return x;
        throw std::logic_error("no Weyl element carries rho to 1/2(9,7,5,1)");
    }();
    return w;
}

WeylElement f4_w_m() {
    static const WeylElement w = [] {
        const RootSystem g = build_root_system("F4");
        const int rows[4][4] = {{1, 1, 1, 1}, {-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}};
        RatMat m(4, RatVec(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = Rat(rows[i][j], 2);
        return find_in_weyl(g, m);
    }();
    return w;
}

long long branch_f4_spin9(const IVec& lambda, const IVec& mu, F4Chamber chamber, KostantStats* stats) {
    static thread_local const PairDescriptor pair = f4_spin9();
    static thread_local KostantBrancher std_kb(pair, 0), alt_kb(pair, 1);
    KostantBrancher& kb = chamber == F4Chamber::standard ? std_kb : alt_kb;
    return kb(from_fund(pair.G, lambda), from_fund(pair.K, mu), stats);
}

long long branch_spin9_spin7(const IVec& mu, const IVec& nu) {
    if (mu.size() != 4 || nu.size() != 3) throw std::invalid_argument("branch_spin9_spin7: bad sizes");
    const long long l4 = nu[0], l3 = nu[1], l2 = nu[2];
    if (l2 < 0 || l3 < 0 || l4 < 0) return 0;
    if (mu[2] == 0 && mu[3] == 0) {
        const long long s = l2 + l3 + l4;
        return (s <= mu[0] + mu[1] && l3 + l4 <= mu[1] && mu[1] <= s) ? 1 : 0;
    }
    if (mu[0] == 0 && mu[1] == 0 && mu[3] == 0)
        return (l2 + l3 <= mu[2] && l3 + l4 <= mu[2] && mu[2] <= l2 + l3 + l4) ? 1 : 0;
    if (mu[0] == 0 && mu[1] == 0 && mu[2] == 0) return (l3 == 0 && l2 + l4 <= mu[3]) ? 1 : 0;
    throw std::invalid_argument("branch_spin9_spin7: mu is off the multiplicity free faces");
}

std::vector<IVec> spin9_spin7_spectrum(const IVec& mu) {
    const int bound = static_cast<int>(mu[0] + mu[1] + mu[2] + mu[3]);
    std::vector<IVec> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c)
                if (branch_spin9_spin7(mu, {a, b, c})) out.push_back({a, b, c});
    return out;
}

}  // namespace gelfand
