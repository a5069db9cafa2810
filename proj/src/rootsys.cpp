#include "gelfand/rootsys.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace gelfand {

const char* lattice_name(Lattice t) {
    switch (t) {
        case Lattice::G: return "G";
        case Lattice::K: return "K";
        case Lattice::M: return "M";
        default: return "any";
    }
}

namespace {

Lattice combine(Lattice a, Lattice b) {
    if (a == Lattice::any) return b;
    if (b == Lattice::any || a == b) return a;
    throw lattice_error(std::string("mixing weights of lattices ") + lattice_name(a) + " and " +
                        lattice_name(b));
}

void check_same_size(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw lattice_error("weight rank mismatch");
}

}  // namespace

Weight Weight::from_eps(const RatVec& eps, Lattice t) {
    IVec d(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const Rat x = eps[i] * 2;
        if (!is_integral(x)) throw lattice_error("epsilon coordinate is not a half-integer");
        d[i] = static_cast<int>(x.numerator());
    }
    return Weight(std::move(d), t);
}

RatVec Weight::eps() const {
    RatVec r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = Rat(d[i], 2);
    return r;
}

bool Weight::is_zero() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
    check_same_size(d, o.d);
    tag = combine(tag, o.tag);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    check_same_size(d, o.d);
    tag = combine(tag, o.tag);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
    return *this;
}

long long dot(const IVec& x, const IVec& y) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<long long>(x[i]) * y[i];
    return s;
}

IVec add(const IVec& x, const IVec& y) {
    IVec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

IVec sub(const IVec& x, const IVec& y) {
    IVec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

IVec scale(int k, const IVec& x) {
    IVec r(x);
    for (auto& v : r) v *= k;
    return r;
}

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement(int n, std::vector<long long> num, long long den, int det)
    : n_(n), num_(std::move(num)), den_(den), det_(det) {
    normalize();
}

void WeylElement::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    long long g = den_;
    for (auto x : num_) g = std::gcd(g, x);
    if (g > 1) {
        den_ /= g;
        for (auto& x : num_) x /= g;
    }
}

WeylElement WeylElement::identity(int n) {
    std::vector<long long> num(n * n, 0);
    for (int i = 0; i < n; ++i) num[i * n + i] = 1;
    return WeylElement(n, std::move(num), 1, 1);
}

WeylElement WeylElement::reflection(const IVec& r) {
    const int n = static_cast<int>(r.size());
    const long long rr = dot(r, r);
    std::vector<long long> num(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            num[i * n + j] = (i == j ? rr : 0) - 2LL * r[i] * r[j];
    return WeylElement(n, std::move(num), rr, -1);
}

RatMat WeylElement::matrix() const {
    RatMat m(n_, RatVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[i][j] = entry(i, j);
    return m;
}

IVec WeylElement::apply(const IVec& v) const {
    if (static_cast<int>(v.size()) != n_) throw lattice_error("Weyl element applied to wrong rank");
    IVec out(n_);
    for (int i = 0; i < n_; ++i) {
        long long s = 0;
        for (int j = 0; j < n_; ++j) s += num_[i * n_ + j] * v[j];
        if (s % den_ != 0) throw lattice_error("Weyl image leaves the lattice");
        out[i] = static_cast<int>(s / den_);
    }
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    std::vector<long long> num(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const long long a = num_[i * n_ + k];
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) num[i * n_ + j] += a * o.num_[k * n_ + j];
        }
    return WeylElement(n_, std::move(num), den_ * o.den_, det_ * o.det_);
}

bool WeylElement::is_orthogonal() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            long long s = 0;
            for (int k = 0; k < n_; ++k) s += num_[k * n_ + i] * num_[k * n_ + j];
            if (s != (i == j ? den_ * den_ : 0)) return false;
        }
    return true;
}

bool operator<(const WeylElement& a, const WeylElement& b) {
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        const long long l = a.num_[i] * b.den_, r = b.num_[i] * a.den_;
        if (l != r) return l < r;
    }
    return false;
}

// ---------------------------------------------------------------- RootSystem

long long RootSystem::coroot_pairing(const IVec& v, int i) const {
    const IVec& a = simple[i];
    const long long num = 2 * dot(v, a), den = dot(a, a);
    if (num % den != 0) throw lattice_error("weight pairs non-integrally with a coroot");
    return num / den;
}

IVec RootSystem::reflect(const IVec& v, int i) const {
    const long long c = coroot_pairing(v, i);
    IVec r(v);
    for (int k = 0; k < dim; ++k) r[k] -= static_cast<int>(c * simple[i][k]);
    return r;
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
    if (weyl_) return *weyl_;
    std::vector<WeylElement> gens;
    for (const auto& a : simple) gens.push_back(WeylElement::reflection(a));
    std::set<WeylElement> seen{WeylElement::identity(dim)};
    std::deque<WeylElement> queue{WeylElement::identity(dim)};
    while (!queue.empty()) {
        WeylElement g = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            WeylElement h = s * g;
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    }
    weyl_ = std::make_shared<const std::vector<WeylElement>>(seen.begin(), seen.end());
    return *weyl_;
}

const std::vector<WeylElement>& weyl_group(const RootSystem& rs) { return rs.weyl_group(); }

namespace {

RatMat columns(const std::vector<IVec>& cols, int dim) {
    RatMat m(dim, RatVec(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < dim; ++i) m[i][j] = cols[j][i];
    return m;
}

RatVec as_rat(const IVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

}  // namespace

RootSystem root_system_from_simple(std::string label, int dim, std::vector<IVec> simple,
                                   std::vector<IVec> fundamental, std::vector<IVec> central,
                                   Lattice tag) {
    RootSystem rs;
    rs.label = std::move(label);
    rs.dim = dim;
    rs.rank = static_cast<int>(simple.size());
    rs.tag = tag;
    rs.simple = std::move(simple);
    rs.central = std::move(central);
    for (const auto& a : rs.simple)
        if (static_cast<int>(a.size()) != dim) throw std::invalid_argument("simple root of wrong size");
    if (rank_exact(columns(rs.simple, dim)) != rs.rank)
        throw std::invalid_argument("simple roots are dependent");

    // All roots: closure of the simple roots under simple reflections.
    std::set<IVec> roots(rs.simple.begin(), rs.simple.end());
    std::deque<IVec> queue(rs.simple.begin(), rs.simple.end());
    while (!queue.empty()) {
        IVec v = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            IVec w = rs.reflect(v, i);
            if (roots.insert(w).second) queue.push_back(std::move(w));
        }
    }
    for (const auto& r : roots) {
        auto c = simple_root_coords(rs, r);
        if (!c) throw std::logic_error("root outside simple-root span");
        if (std::all_of(c->begin(), c->end(), [](const Rat& x) { return x >= 0; }))
            rs.positive.push_back(r);
    }
    if (rs.positive.size() * 2 != roots.size()) throw std::logic_error("roots not split by sign");

    if (fundamental.empty()) {
        RatMat cartan(rs.rank, RatVec(rs.rank));
        for (int k = 0; k < rs.rank; ++k)
            for (int j = 0; j < rs.rank; ++j) cartan[k][j] = rs.coroot_pairing(rs.simple[k], j);
        const RatMat c = inverse_exact(cartan);
        for (int i = 0; i < rs.rank; ++i) {
            IVec w(dim);
            for (int t = 0; t < dim; ++t) {
                Rat s = 0;
                for (int k = 0; k < rs.rank; ++k) s += c[i][k] * rs.simple[k][t];
                if (!is_integral(s)) throw std::invalid_argument("fundamental weight not in doubled lattice");
                w[t] = static_cast<int>(s.numerator());
            }
            fundamental.push_back(std::move(w));
        }
    }
    rs.fundamental = std::move(fundamental);
    if (static_cast<int>(rs.fundamental.size()) != rs.rank)
        throw std::invalid_argument("need one fundamental weight per simple root");
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            if (rs.coroot_pairing(rs.fundamental[i], j) != (i == j ? 1 : 0))
                throw std::invalid_argument("fundamental weights are not dual to the coroots");
    for (const auto& z : rs.central)
        for (const auto& a : rs.simple)
            if (dot(z, a) != 0) throw std::invalid_argument("central direction not orthogonal to roots");

    rs.rho.assign(dim, 0);
    for (const auto& a : rs.positive)
        for (int t = 0; t < dim; ++t) rs.rho[t] += a[t];
    for (auto& x : rs.rho) {
        if (x % 2 != 0) throw std::logic_error("odd root sum");
        x /= 2;
    }
    return rs;
}

namespace {

IVec unit(int dim, int i, int value) {
    IVec v(dim, 0);
    v[i] = value;
    return v;
}

IVec eps_diff(int dim, int i, int j, int sign) {  // doubled e_i + sign * e_j
    IVec v(dim, 0);
    v[i] += 2;
    v[j] += 2 * sign;
    return v;
}

RootSystem build_simple_factor(const std::string& lab, Lattice tag) {
    if (lab == "G2") return root_system_from_simple("G2", 3, {{2, -2, 0}, {-4, 2, 2}}, {}, {}, tag);
    if (lab == "F4")
        return root_system_from_simple("F4", 4, {{1, -1, -1, -1}, {0, 0, 0, 2}, {0, 0, 2, -2}, {0, 2, -2, 0}},
                                       {}, {}, tag);
    if (lab.size() < 2) throw std::invalid_argument("unsupported root system label: " + lab);
    const char type = lab[0];
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(lab.substr(1), &pos);
        if (pos + 1 != lab.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
        throw std::invalid_argument("unsupported root system label: " + lab);
    }
    std::vector<IVec> simple;
    switch (type) {
        case 'A': {
            if (n < 1) break;
            const int d = n + 1;
            std::vector<IVec> fund;
            for (int i = 0; i < n; ++i) simple.push_back(eps_diff(d, i, i + 1, -1));
            for (int i = 0; i < n; ++i) {
                IVec w(d, 0);
                for (int k = 0; k <= i; ++k) w[k] = 2;
                fund.push_back(std::move(w));
            }
            return root_system_from_simple(lab, d, std::move(simple), std::move(fund), {IVec(d, 2)}, tag);
        }
        case 'B':
        case 'C':
            if (n < 1 || (type == 'B' && n < 2)) break;
            for (int i = 0; i + 1 < n; ++i) simple.push_back(eps_diff(n, i, i + 1, -1));
            simple.push_back(unit(n, n - 1, type == 'B' ? 2 : 4));
            return root_system_from_simple(lab, n, std::move(simple), {}, {}, tag);
        case 'D':
            if (n < 2) break;
            for (int i = 0; i + 1 < n; ++i) simple.push_back(eps_diff(n, i, i + 1, -1));
            simple.push_back(eps_diff(n, n - 2, n - 1, +1));
            return root_system_from_simple(lab, n, std::move(simple), {}, {}, tag);
        default: break;
    }
    throw std::invalid_argument("unsupported root system label: " + lab);
}

}  // namespace

RootSystem build_root_system(std::string_view label, Lattice tag) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : label) {
        if (c == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1) return build_simple_factor(parts[0], tag);

    std::vector<RootSystem> factors;
    int dim = 0;
    for (const auto& p : parts) {
        factors.push_back(build_simple_factor(p, tag));
        dim += factors.back().dim;
    }
    std::vector<IVec> simple, fund, central;
    int off = 0;
    auto pad = [&](const IVec& v) {
        IVec w(dim, 0);
        std::copy(v.begin(), v.end(), w.begin() + off);
        return w;
    };
    for (const auto& f : factors) {
        for (const auto& a : f.simple) simple.push_back(pad(a));
        for (const auto& w : f.fundamental) fund.push_back(pad(w));
        for (const auto& z : f.central) central.push_back(pad(z));
        off += f.dim;
    }
    return root_system_from_simple(std::string(label), dim, std::move(simple), std::move(fund),
                                   std::move(central), tag);
}

// ---------------------------------------------------------------- coordinates

void check_lattice(const RootSystem& rs, const Weight& w) {
    if (w.tag != Lattice::any && rs.tag != Lattice::any && w.tag != rs.tag)
        throw lattice_error(std::string("weight of lattice ") + lattice_name(w.tag) +
                            " used with root system of lattice " + lattice_name(rs.tag));
    if (static_cast<int>(w.size()) != rs.dim) throw lattice_error("weight has wrong rank for " + rs.label);
    (void)to_fundamental(rs, w);
}

std::vector<long long> to_fundamental(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.size()) != rs.dim) throw lattice_error("weight has wrong rank for " + rs.label);
    std::vector<IVec> basis = rs.fundamental;
    basis.insert(basis.end(), rs.central.begin(), rs.central.end());
    auto x = solve_exact(columns(basis, rs.dim), as_rat(w.d));
    if (!x) throw lattice_error("weight outside the weight space of " + rs.label);
    std::vector<long long> out;
    for (const auto& c : *x) {
        if (!is_integral(c)) throw lattice_error("weight outside the weight lattice of " + rs.label);
        out.push_back(c.numerator());
    }
    return out;
}

Weight from_fundamental(const RootSystem& rs, const std::vector<long long>& coords) {
    const std::size_t nb = rs.fundamental.size() + rs.central.size();
    if (coords.size() != rs.fundamental.size() && coords.size() != nb)
        throw lattice_error("wrong number of fundamental coordinates for " + rs.label);
    IVec d(rs.dim, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const IVec& b = i < rs.fundamental.size() ? rs.fundamental[i] : rs.central[i - rs.fundamental.size()];
        for (int t = 0; t < rs.dim; ++t) d[t] += static_cast<int>(coords[i] * b[t]);
    }
    return Weight(std::move(d), rs.tag);
}

RatVec coords_convert(const RootSystem& rs, const Weight& w, Coords target) {
    check_lattice(rs, w);
    if (target == Coords::epsilon) return w.eps();
    RatVec r;
    for (auto c : to_fundamental(rs, w)) r.emplace_back(c);
    return r;
}

std::optional<RatVec> simple_root_coords(const RootSystem& rs, const IVec& v) {
    return solve_exact(columns(rs.simple, rs.dim), as_rat(v));
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
    check_lattice(rs, w);
    for (int i = 0; i < rs.rank; ++i)
        if (rs.coroot_pairing(w.d, i) < 0) return false;
    return true;
}

bool dominance_leq(const RootSystem& rs, const Weight& lo, const Weight& hi) {
    check_lattice(rs, lo);
    check_lattice(rs, hi);
    auto c = simple_root_coords(rs, sub(hi.d, lo.d));
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rat& x) { return x >= 0 && is_integral(x); });
}

DominantConjugate dominant_conjugate(const RootSystem& rs, IVec v) {
    int sign = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (rs.coroot_pairing(v, i) < 0) {
                v = rs.reflect(v, i);
                sign = -sign;
                moved = true;
            }
        }
    }
    return {std::move(v), sign};
}

std::vector<IVec> weyl_orbit(const RootSystem& rs, const IVec& v) {
    std::set<IVec> seen{v};
    std::deque<IVec> queue{v};
    while (!queue.empty()) {
        IVec x = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank; ++i) {
            IVec y = rs.reflect(x, i);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<DominantConjugate> shifted_dominant(const RootSystem& rs, const IVec& v) {
    auto dc = dominant_conjugate(rs, add(v, rs.rho));
    for (int i = 0; i < rs.rank; ++i)
        if (rs.coroot_pairing(dc.v, i) == 0) return std::nullopt;
    dc.v = sub(dc.v, rs.rho);
    return dc;
}

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = WeylElement::identity(rs.dim);
    for (int i : word) {
        if (i < 0 || i >= rs.rank) throw std::invalid_argument("weyl_from_word: bad simple index");
        w = w * WeylElement::reflection(rs.simple[i]);
    }
    return w;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w0) {
    // w(alpha_i) < 0 exactly when w s_i is shorter; peel s_i off the right.
    const std::set<IVec> pos(rs.positive.begin(), rs.positive.end());
    std::vector<int> word;
    WeylElement w = w0;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (!pos.count(scale(-1, w.apply(rs.simple[i])))) continue;
            w = w * WeylElement::reflection(rs.simple[i]);
            word.push_back(i);
            moved = true;
            break;
        }
    }
    if (!(w == WeylElement::identity(rs.dim))) throw std::logic_error("reduced_word: element not in W");
    std::reverse(word.begin(), word.end());
    return word;
}

// ---------------------------------------------------------------- characters

std::uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant(rs, lambda)) throw std::invalid_argument("weyl_dim: weight is not dominant");
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::cpp_rational;
    const IVec lr = add(lambda.d, rs.rho);
    cpp_rational p = 1;
    for (const auto& a : rs.positive) p *= cpp_rational(cpp_int(dot(lr, a)), cpp_int(dot(rs.rho, a)));
    if (denominator(p) != 1) throw std::logic_error("weyl_dim: non-integral product");
    const cpp_int n = numerator(p);
    if (n > cpp_int(std::numeric_limits<std::int64_t>::max())) throw cap_exceeded("weyl_dim overflows 64 bits");
    return static_cast<std::uint64_t>(n);
}

WeightMults dominant_multiplicities(const RootSystem& rs, const Weight& lambda, std::uint64_t dim_cap) {
    const std::uint64_t dim = weyl_dim(rs, lambda);
    if (dim > dim_cap) {
        std::ostringstream os;
        os << "dimension " << dim << " of " << rs.label << " representation exceeds cap " << dim_cap;
        throw cap_exceeded(os.str());
    }
    // Dominant weights below lambda are connected by positive-root steps
    // (Stembridge), so a downward search by positive roots finds them all.
    std::set<IVec> dom{lambda.d};
    std::deque<IVec> queue{lambda.d};
    auto dominant = [&](const IVec& v) {
        for (int i = 0; i < rs.rank; ++i)
            if (rs.coroot_pairing(v, i) < 0) return false;
        return true;
    };
    while (!queue.empty()) {
        IVec v = queue.front();
        queue.pop_front();
        for (const auto& a : rs.positive) {
            IVec w = sub(v, a);
            if (dominant(w) && dom.insert(w).second) queue.push_back(std::move(w));
        }
    }
    std::vector<IVec> order(dom.begin(), dom.end());
    std::stable_sort(order.begin(), order.end(), [&](const IVec& x, const IVec& y) {
        return dot(x, rs.rho) > dot(y, rs.rho);
    });
    const IVec lr = add(lambda.d, rs.rho);
    const long long top = dot(lr, lr);
    WeightMults m;
    m[lambda.d] = 1;
    for (const auto& mu : order) {
        if (mu == lambda.d) continue;
        long long num = 0;
        for (const auto& a : rs.positive) {
            IVec x = add(mu, a);
            for (;;) {
                IVec d = dominant_conjugate(rs, x).v;
                auto it = m.find(d);
                if (it == m.end()) {
                    if (dom.count(d)) throw std::logic_error("Freudenthal order violated");
                    break;
                }
                num += 2 * dot(x, a) * it->second;
                x = add(x, a);
            }
        }
        const IVec mr = add(mu, rs.rho);
        const long long den = top - dot(mr, mr);
        if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion is not integral");
        m[mu] = num / den;
    }
    return m;
}

WeightMults weight_multiplicities(const RootSystem& rs, const Weight& lambda, std::uint64_t dim_cap) {
    WeightMults out;
    for (const auto& [mu, k] : dominant_multiplicities(rs, lambda, dim_cap)) {
        if (k == 0) continue;
        for (auto& v : weyl_orbit(rs, mu)) out[v] = k;
    }
    return out;
}

const WeightMults& CharacterCache::character(const IVec& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(lambda, weight_multiplicities(*rs_, rs_->weight(lambda), cap_)).first->second;
}

}  // namespace gelfand
