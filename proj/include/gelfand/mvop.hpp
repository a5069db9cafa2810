// Matrix valued orthogonal polynomials on [-1,1] for factored weights
// W(x) = T(x)^† D T(x) (1-x)^alpha (1+x)^beta.
//
// Everything is templated on the real scalar: double, or Quad for the long
// sequences where double monomial coefficients run out of digits. Inner
// products are antilinear in the first argument.
#pragma once

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gelfand::mvop {

using Quad = boost::multiprecision::float128;
using Exact = boost::multiprecision::cpp_rational;

template <class R> struct complex_of;
template <> struct complex_of<double> { using type = std::complex<double>; };
template <> struct complex_of<Quad> { using type = boost::multiprecision::complex128; };
template <class R> using Cx = typename complex_of<R>::type;

struct budget_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct weight_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct schema_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct singular_gram_error : std::runtime_error {
    singular_gram_error(int deg, double cond)
        : std::runtime_error("numerically singular Gram block at degree " + std::to_string(deg) +
                             " (condition " + std::to_string(cond) + ")"),
          degree(deg), condition(cond) {}
    int degree;
    double condition;  // infinity when the block is not positive definite
};

template <class R> Cx<R> cconj(const Cx<R>& z) { return Cx<R>(z.real(), -z.imag()); }
template <class R> R abs2(const Cx<R>& z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Small dense complex square matrix, row major.
template <class R> class CMatrix {
public:
    using C = Cx<R>;

    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, C(0)) {}
    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = C(1);
        return m;
    }

    int size() const { return n_; }
    C& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const C& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    CMatrix adjoint() const {
        CMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = cconj<R>((*this)(i, j));
        return m;
    }

    CMatrix& operator+=(const CMatrix& o) {
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMatrix& operator*=(const C& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const C& s) { return a *= s; }
    friend CMatrix operator*(const C& s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        const int n = a.n_;
        CMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const C& s = a(i, k);
                for (int j = 0; j < n; ++j) m(i, j) += s * b(k, j);
            }
        return m;
    }

    R norm() const {  // Frobenius
        using std::sqrt;
        R s = 0;
        for (const auto& v : a_) s += abs2<R>(v);
        return sqrt(s);
    }
    R norm2() const {
        R s = 0;
        for (const auto& v : a_) s += abs2<R>(v);
        return s;
    }
    // Largest column sum of absolute values.
    R norm1() const {
        using std::sqrt;
        R best = 0;
        for (int j = 0; j < n_; ++j) {
            R s = 0;
            for (int i = 0; i < n_; ++i) s += sqrt(abs2<R>((*this)(i, j)));
            if (s > best) best = s;
        }
        return best;
    }

private:
    int n_ = 0;
    std::vector<C> a_;
};

// Solves A X = B by LU with partial pivoting; std::domain_error if A is singular.
template <class R> CMatrix<R> solve(CMatrix<R> a, CMatrix<R> b) {
    const int n = a.size();
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (abs2<R>(a(r, c)) > abs2<R>(a(piv, c))) piv = r;
        if (abs2<R>(a(piv, c)) == R(0)) throw std::domain_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(b(c, j), b(piv, j));
            }
        for (int r = c + 1; r < n; ++r) {
            const auto f = a(r, c) / a(c, c);
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
            for (int j = 0; j < n; ++j) b(r, j) -= f * b(c, j);
        }
    }
    for (int c = n - 1; c >= 0; --c)
        for (int j = 0; j < n; ++j) {
            auto s = b(c, j);
            for (int k = c + 1; k < n; ++k) s -= a(c, k) * b(k, j);
            b(c, j) = s / a(c, c);
        }
    return b;
}

template <class R> CMatrix<R> inverse(const CMatrix<R>& a) { return solve(a, CMatrix<R>::identity(a.size())); }

// Cholesky succeeds on the Hermitian part of a.
template <class R> bool is_positive_definite(const CMatrix<R>& a) {
    using std::sqrt;
    const int n = a.size();
    std::vector<Cx<R>> l(static_cast<size_t>(n) * n, Cx<R>(0));
    auto L = [&](int i, int j) -> Cx<R>& { return l[static_cast<size_t>(i) * n + j]; };
    for (int j = 0; j < n; ++j) {
        R d = ((a(j, j) + cconj<R>(a(j, j))) * Cx<R>(R(0.5))).real();
        for (int k = 0; k < j; ++k) d -= abs2<R>(L(j, k));
        if (!(d > R(0))) return false;
        const R s = sqrt(d);
        L(j, j) = Cx<R>(s);
        for (int i = j + 1; i < n; ++i) {
            Cx<R> v = (a(i, j) + cconj<R>(a(j, i))) * Cx<R>(R(0.5));
            for (int k = 0; k < j; ++k) v -= L(i, k) * cconj<R>(L(j, k));
            L(i, j) = v / Cx<R>(s);
        }
    }
    return true;
}

// ||A||_1 ||A^-1||_1; infinity when A is singular.
template <class R> double condition_number(const CMatrix<R>& a) {
    try {
        return static_cast<double>(a.norm1() * inverse(a).norm1());
    } catch (const std::domain_error&) {
        return std::numeric_limits<double>::infinity();
    }
}

template <class R> class MatrixPolynomial {
public:
    using C = Cx<R>;

    explicit MatrixPolynomial(int n = 1) : n_(n) {}
    MatrixPolynomial(int n, std::vector<CMatrix<R>> coeffs) : n_(n), c_(std::move(coeffs)) {
        for (const auto& m : c_)
            if (m.size() != n_) throw std::invalid_argument("coefficient size mismatch");
        trim();
    }
    static MatrixPolynomial constant(const CMatrix<R>& a) { return MatrixPolynomial(a.size(), {a}); }
    static MatrixPolynomial monomial(int n, int k) {
        std::vector<CMatrix<R>> c(k + 1, CMatrix<R>(n));
        c[k] = CMatrix<R>::identity(n);
        return MatrixPolynomial(n, std::move(c));
    }

    int size() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<CMatrix<R>>& coeffs() const { return c_; }
    CMatrix<R> coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : CMatrix<R>(n_); }
    bool is_monic() const {
        if (c_.empty()) return false;
        const auto& lead = c_.back();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (lead(i, j) != C(i == j ? 1 : 0)) return false;
        return true;
    }

    CMatrix<R> operator()(const R& x) const {
        CMatrix<R> v(n_);
        for (int k = degree(); k >= 0; --k) {
            v *= C(x);
            v += c_[k];
        }
        return v;
    }

    MatrixPolynomial times_x() const {
        if (c_.empty()) return *this;
        std::vector<CMatrix<R>> c;
        c.reserve(c_.size() + 1);
        c.emplace_back(n_);
        c.insert(c.end(), c_.begin(), c_.end());
        return MatrixPolynomial(n_, std::move(c));
    }

    MatrixPolynomial& operator+=(const MatrixPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), CMatrix<R>(n_));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    MatrixPolynomial& operator-=(const MatrixPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), CMatrix<R>(n_));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
    friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }
    friend MatrixPolynomial operator*(const MatrixPolynomial& p, const CMatrix<R>& a) {
        std::vector<CMatrix<R>> c;
        for (const auto& m : p.c_) c.push_back(m * a);
        return MatrixPolynomial(p.n_, std::move(c));
    }
    friend MatrixPolynomial operator*(const CMatrix<R>& a, const MatrixPolynomial& p) {
        std::vector<CMatrix<R>> c;
        for (const auto& m : p.c_) c.push_back(a * m);
        return MatrixPolynomial(p.n_, std::move(c));
    }
    friend MatrixPolynomial operator*(const MatrixPolynomial& p, const MatrixPolynomial& q) {
        if (p.c_.empty() || q.c_.empty()) return MatrixPolynomial(p.n_);
        std::vector<CMatrix<R>> c(p.c_.size() + q.c_.size() - 1, CMatrix<R>(p.n_));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
        return MatrixPolynomial(p.n_, std::move(c));
    }

    // sqrt of the sum of squared moduli of all coefficient entries.
    R coeff_norm() const {
        using std::sqrt;
        R s = 0;
        for (const auto& m : c_) s += m.norm2();
        return sqrt(s);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().norm2() == R(0)) c_.pop_back();
    }

    int n_;
    std::vector<CMatrix<R>> c_;
};

template <class R> struct GaussRule {
    std::vector<R> x, w;
};

// Monic Jacobi recurrence p_{j+1} = (x - a_j) p_j - b_j p_{j-1}, j < k; b[0] = 0.
template <class R> std::pair<std::vector<R>, std::vector<R>> jacobi_recurrence(int k, const R& alpha, const R& beta) {
    std::vector<R> a(k), b(k, R(0));
    const R s = alpha + beta;
    for (int j = 0; j < k; ++j) {
        if (j == 0) {
            a[0] = (beta - alpha) / (s + 2);
            continue;
        }
        const R t = 2 * j + s;
        a[j] = (beta * beta - alpha * alpha) / (t * (t + 2));
        if (j == 1)  // the generic form is 0/0 when alpha + beta = -1
            b[1] = 4 * (1 + alpha) * (1 + beta) / ((2 + s) * (2 + s) * (3 + s));
        else
            b[j] = 4 * j * (j + alpha) * (j + beta) * (j + s) / (t * t * (t + 1) * (t - 1));
    }
    return {a, b};
}

// Total mass of (1-x)^alpha (1+x)^beta on [-1,1].
template <class R> R jacobi_mass(const R& alpha, const R& beta) {
    using std::pow;
    using std::tgamma;
    return pow(R(2), alpha + beta + 1) * tgamma(alpha + 1) * tgamma(beta + 1) / tgamma(alpha + beta + 2);
}

// Eigenvalues of the symmetric tridiagonal matrix (diag, off), ascending.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off);

// k-point Gauss–Jacobi rule: Golub–Welsch seeds in double, Newton refinement
// on the Jacobi polynomial in R, Christoffel weights from the orthonormal
// recurrence.
template <class R> GaussRule<R> gauss_jacobi(int k, const R& alpha, const R& beta) {
    using std::abs;
    using std::sqrt;
    if (k < 1) throw std::invalid_argument("gauss_jacobi needs at least one node");
    if (!(alpha > R(-1)) || !(beta > R(-1))) throw weight_error("Jacobi exponents must exceed -1");
    const auto [a, b] = jacobi_recurrence<R>(k, alpha, beta);
    std::vector<double> da(k), off(k > 1 ? k - 1 : 0);
    for (int j = 0; j < k; ++j) da[j] = static_cast<double>(a[j]);
    for (int j = 1; j < k; ++j) off[j - 1] = std::sqrt(static_cast<double>(b[j]));
    const auto seeds = tridiagonal_eigenvalues(da, off);

    const R eps = std::numeric_limits<R>::epsilon();
    const R mass = jacobi_mass(alpha, beta);
    GaussRule<R> rule;
    for (double seed : seeds) {
        R x = seed;
        for (int it = 0; it < 40; ++it) {
            R p0 = 1, p1 = x - a[0], d0 = 0, d1 = 1;
            for (int j = 1; j < k; ++j) {
                const R p2 = (x - a[j]) * p1 - b[j] * p0;
                const R d2 = p1 + (x - a[j]) * d1 - b[j] * d0;
                p0 = p1, p1 = p2, d0 = d1, d1 = d2;
            }
            const R dx = p1 / d1;
            x -= dx;
            if (abs(dx) <= 4 * eps) break;
        }
        R q0 = 0, q1 = 1, sum = 1;
        for (int j = 0; j + 1 < k; ++j) {
            const R q2 = ((x - a[j]) * q1 - (j > 0 ? sqrt(b[j]) : R(0)) * q0) / sqrt(b[j + 1]);
            q0 = q1, q1 = q2;
            sum += q1 * q1;
        }
        rule.x.push_back(x);
        rule.w.push_back(mass / sum);
    }
    return rule;
}

template <class R> struct MatrixWeight {
    int N = 1;
    R alpha = 0, beta = 0;
    MatrixPolynomial<R> T;
    std::vector<R> D;

    // T(x)^† D T(x), the weight without its scalar Jacobi factor.
    CMatrix<R> kernel(const R& x) const {
        const auto t = T(x);
        CMatrix<R> dt = t;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) dt(i, j) *= Cx<R>(D[i]);
        return t.adjoint() * dt;
    }
    CMatrix<R> operator()(const R& x) const {
        using std::pow;
        return kernel(x) * Cx<R>(pow(1 - x, alpha) * pow(1 + x, beta));
    }
};

template <class R>
MatrixWeight<R> weight_from_factors(MatrixPolynomial<R> T, std::vector<R> D, R alpha, R beta) {
    const int n = T.size();
    if (static_cast<int>(D.size()) != n) throw weight_error("D must have one entry per row of T");
    for (const auto& d : D)
        if (!(d > R(0))) throw weight_error("D must be positive (non-positive entry " +
                                            std::to_string(static_cast<double>(d)) + ")");
    if (!(alpha > R(-1)) || !(beta > R(-1))) throw weight_error("Jacobi exponents must exceed -1");
    if (T.degree() < 0) throw weight_error("T is the zero polynomial");
    MatrixWeight<R> w;
    w.N = n;
    w.alpha = alpha;
    w.beta = beta;
    w.T = std::move(T);
    w.D = std::move(D);
    return w;
}

template <class R> class InnerProductEngine {
public:
    InnerProductEngine(MatrixWeight<R> weight, int nodes) : w_(std::move(weight)) {
        rule_ = gauss_jacobi<R>(nodes, w_.alpha, w_.beta);
        for (size_t i = 0; i < rule_.x.size(); ++i) kernel_.push_back(w_.kernel(rule_.x[i]) * Cx<R>(rule_.w[i]));
    }
    // Node count that makes Gram–Schmidt, expansion and the recurrence exact through n_max.
    static int nodes_for_degree(const MatrixWeight<R>& w, int n_max) { return n_max + w.T.degree() + 1; }
    static InnerProductEngine for_degree(MatrixWeight<R> w, int n_max) {
        const int k = nodes_for_degree(w, n_max);
        return InnerProductEngine(std::move(w), k);
    }

    const MatrixWeight<R>& weight() const { return w_; }
    int nodes() const { return static_cast<int>(rule_.x.size()); }
    const GaussRule<R>& rule() const { return rule_; }
    int required_nodes(int deg_p, int deg_q) const { return (deg_p + deg_q + 2 * w_.T.degree()) / 2 + 1; }
    void require(int deg_p, int deg_q) const {
        const int need = required_nodes(deg_p, deg_q);
        if (need > nodes())
            throw budget_error("node budget " + std::to_string(nodes()) + " below the " + std::to_string(need) +
                               " needed for degrees " + std::to_string(deg_p) + " and " + std::to_string(deg_q));
    }

    std::vector<CMatrix<R>> values(const MatrixPolynomial<R>& p) const {
        std::vector<CMatrix<R>> v;
        v.reserve(rule_.x.size());
        for (const auto& x : rule_.x) v.push_back(p(x));
        return v;
    }
    // Quadrature sum for polynomials already evaluated at the nodes; no budget check.
    CMatrix<R> gram(const std::vector<CMatrix<R>>& p, const std::vector<CMatrix<R>>& q) const {
        CMatrix<R> s(w_.N);
        for (size_t i = 0; i < kernel_.size(); ++i) s += p[i].adjoint() * (kernel_[i] * q[i]);
        return s;
    }
    CMatrix<R> inner_product(const MatrixPolynomial<R>& p, const MatrixPolynomial<R>& q) const {
        if (p.degree() < 0 || q.degree() < 0) return CMatrix<R>(w_.N);
        require(p.degree(), q.degree());
        return gram(values(p), values(q));
    }

private:
    MatrixWeight<R> w_;
    GaussRule<R> rule_;
    std::vector<CMatrix<R>> kernel_;  // quadrature weight times T^† D T at each node
};

template <class R> struct MonicSequence {
    std::vector<MatrixPolynomial<R>> M;
    std::vector<CMatrix<R>> norms;             // <M_n, M_n>
    std::vector<double> condition;             // condition numbers of the norms
    std::vector<std::vector<CMatrix<R>>> at;   // M_n at the engine nodes
};

// M_n is x M_{n-1} orthogonalized against M_0..M_{n-1} (two passes), which is
// the same monic polynomial as x^n - sum M_m <M_m,M_m>^-1 <M_m,x^n>.
// Throws singular_gram_error when a norm is not positive definite or its
// condition number exceeds max_condition.
template <class R>
MonicSequence<R> monic_sequence(const InnerProductEngine<R>& eng, int n_max, double max_condition = 1e12) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    eng.require(n_max, n_max);
    const int N = eng.weight().N;
    MonicSequence<R> s;
    auto accept = [&](MatrixPolynomial<R> p, std::vector<CMatrix<R>> v) {
        auto h = eng.gram(v, v);
        h = (h + h.adjoint()) * Cx<R>(R(0.5));
        const int deg = static_cast<int>(s.M.size());
        const double cond = is_positive_definite(h) ? condition_number(h) : std::numeric_limits<double>::infinity();
        if (!(cond <= max_condition)) throw singular_gram_error(deg, cond);
        s.M.push_back(std::move(p));
        s.at.push_back(std::move(v));
        s.norms.push_back(std::move(h));
        s.condition.push_back(cond);
    };
    accept(MatrixPolynomial<R>::constant(CMatrix<R>::identity(N)),
           std::vector<CMatrix<R>>(eng.nodes(), CMatrix<R>::identity(N)));
    const auto& xs = eng.rule().x;
    for (int n = 1; n <= n_max; ++n) {
        auto p = s.M.back().times_x();
        auto v = s.at.back();
        for (size_t i = 0; i < v.size(); ++i) v[i] *= Cx<R>(xs[i]);
        for (int pass = 0; pass < 2; ++pass)
            for (int m = 0; m < n; ++m) {
                const auto c = solve(s.norms[m], eng.gram(s.at[m], v));
                p -= s.M[m] * c;
                for (size_t i = 0; i < v.size(); ++i) v[i] -= s.at[m][i] * c;
            }
        accept(std::move(p), std::move(v));
    }
    return s;
}

template <class R> struct Expansion {
    std::vector<CMatrix<R>> C;  // P = sum_n M_n C_n
    R residual = 0;             // relative coefficient norm of P - sum M_n C_n
};

template <class R>
Expansion<R> expand_in_monic(const InnerProductEngine<R>& eng, const MonicSequence<R>& basis,
                             const MatrixPolynomial<R>& p) {
    const int d = p.degree();
    if (d >= static_cast<int>(basis.M.size())) throw std::invalid_argument("basis does not cover the degree of P");
    Expansion<R> e;
    e.C.assign(std::max(d + 1, 0), CMatrix<R>(eng.weight().N));
    if (d < 0) return e;
    eng.require(d, d);
    auto v = eng.values(p);
    for (int n = d; n >= 0; --n) {
        e.C[n] = solve(basis.norms[n], eng.gram(basis.at[n], v));
        for (size_t i = 0; i < v.size(); ++i) v[i] -= basis.at[n][i] * e.C[n];
    }
    auto r = p;
    for (int n = 0; n <= d; ++n) r -= basis.M[n] * e.C[n];
    e.residual = r.coeff_norm() / p.coeff_norm();
    return e;
}

template <class R> struct Recurrence {
    // x M_n = M_{n+1} + M_n B_n + M_{n-1} C_n for n = 0..len-2, with C_0 = 0.
    std::vector<CMatrix<R>> B, C;
    std::vector<R> residual;  // relative to ||x M_n||
};

template <class R> Recurrence<R> recurrence_coeffs(const InnerProductEngine<R>& eng, const MonicSequence<R>& basis) {
    const int len = static_cast<int>(basis.M.size());
    if (len < 2) throw std::invalid_argument("recurrence needs at least M_0 and M_1");
    eng.require(len - 1, len - 2);
    const auto& xs = eng.rule().x;
    const int N = eng.weight().N;
    Recurrence<R> rec;
    for (int n = 0; n + 1 < len; ++n) {
        auto xv = basis.at[n];
        for (size_t i = 0; i < xv.size(); ++i) xv[i] *= Cx<R>(xs[i]);
        const auto b = solve(basis.norms[n], eng.gram(basis.at[n], xv));
        const auto c = n > 0 ? solve(basis.norms[n - 1], eng.gram(basis.at[n - 1], xv)) : CMatrix<R>(N);
        const auto xm = basis.M[n].times_x();
        auto r = xm - basis.M[n + 1] - basis.M[n] * b;
        if (n > 0) r -= basis.M[n - 1] * c;
        rec.B.push_back(b);
        rec.C.push_back(c);
        rec.residual.push_back(r.coeff_norm() / xm.coeff_norm());
    }
    return rec;
}

// max over m != n of ||<M_m,M_n>|| / ||<M_n,M_n>||.
template <class R> double orthogonality_residual(const InnerProductEngine<R>& eng, const MonicSequence<R>& s) {
    double worst = 0;
    for (size_t n = 0; n < s.M.size(); ++n)
        for (size_t m = 0; m < s.M.size(); ++m) {
            if (m == n) continue;
            const double r = static_cast<double>(eng.gram(s.at[m], s.at[n]).norm() / s.norms[n].norm());
            if (r > worst) worst = r;
        }
    return worst;
}

// Weight specification read from a JSON document; numbers kept exact.
struct ExactComplex {
    Exact re, im;
};

struct WeightSpec {
    int N = 1;
    Exact alpha, beta;
    std::vector<Exact> D;
    std::vector<std::vector<ExactComplex>> T;  // T[k] = coefficient of x^k, row major N*N
};

// Throws schema_error on malformed input.
WeightSpec parse_weight_spec(const std::string& json_text);
// "3", "-1/2", "0.125", "2.5e-3".
Exact parse_exact(const std::string& s);

template <class R> R to_real(const Exact& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if constexpr (std::is_same_v<R, double>) {
        return static_cast<double>(q);
    } else {
        return R(numerator(q).str()) / R(denominator(q).str());
    }
}

// Validates positivity through weight_from_factors (weight_error).
template <class R> MatrixWeight<R> to_weight(const WeightSpec& spec) {
    const int n = spec.N;
    std::vector<CMatrix<R>> coeffs;
    for (const auto& c : spec.T) {
        CMatrix<R> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& z = c[static_cast<size_t>(i) * n + j];
                m(i, j) = Cx<R>(to_real<R>(z.re), to_real<R>(z.im));
            }
        coeffs.push_back(std::move(m));
    }
    std::vector<R> d;
    for (const auto& q : spec.D) d.push_back(to_real<R>(q));
    return weight_from_factors(MatrixPolynomial<R>(n, std::move(coeffs)), std::move(d), to_real<R>(spec.alpha),
                                  to_real<R>(spec.beta));
}

}  // namespace gelfand::mvop
