#include "doctest.h"

#include "gelfand/mvop.hpp"
#include "support/jacobi_oracle.hpp"
#include "support/random_weights.hpp"

#include <Eigen/Eigenvalues>

using namespace gelfand::mvop;

namespace {

template <class R> MatrixWeight<R> scalar_jacobi(int n, R alpha, R beta) {
    return weight_from_factors(MatrixPolynomial<R>::constant(CMatrix<R>::identity(n)), std::vector<R>(n, R(1)),
                                  alpha, beta);
}

MatrixPolynomial<double> scalar_poly(std::vector<double> c) {
    std::vector<CMatrix<double>> m;
    for (double v : c) {
        CMatrix<double> a(1);
        a(0, 0) = v;
        m.push_back(a);
    }
    return MatrixPolynomial<double>(1, std::move(m));
}

template <class R> double max_coeff_error(const MatrixPolynomial<R>& p, const oracle::Poly& exact) {
    double err = 0, scale = 0;
    for (const auto& q : exact) scale = std::max(scale, std::abs(static_cast<double>(q)));
    for (size_t k = 0; k < exact.size(); ++k) {
        const auto c = p.coeff(static_cast<int>(k))(0, 0);
        err = std::max(err, static_cast<double>(abs(c.real() - to_real<R>(exact[k]))));
        err = std::max(err, static_cast<double>(abs(c.imag())));
    }
    return err / scale;
}

double min_eigenvalue(const CMatrix<double>& h) {
    Eigen::MatrixXcd m(h.size(), h.size());
    for (int i = 0; i < h.size(); ++i)
        for (int j = 0; j < h.size(); ++j) m(i, j) = h(i, j);
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

CMatrix<double> to_double(const CMatrix<Quad>& a) {
    CMatrix<double> m(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            m(i, j) = {static_cast<double>(a(i, j).real()), static_cast<double>(a(i, j).imag())};
    return m;
}

}  // namespace

TEST_CASE("inner product examples") {
    const auto eng2 = InnerProductEngine<double>(scalar_jacobi<double>(2, 0, 0), 4);
    const auto one2 = MatrixPolynomial<double>::constant(CMatrix<double>::identity(2));
    CHECK((eng2.inner_product(one2, one2) - CMatrix<double>::identity(2) * 2.0).norm() < 1e-14);

    const auto eng = InnerProductEngine<double>(scalar_jacobi<double>(1, 0, 0), 4);
    const auto x = scalar_poly({0, 1});
    CHECK(eng.inner_product(x, x)(0, 0).real() == doctest::Approx(2.0 / 3).epsilon(1e-14));

    const auto eng10 = InnerProductEngine<double>(scalar_jacobi<double>(1, 1, 0), 4);
    const auto one = scalar_poly({1});
    CHECK(eng10.inner_product(one, one)(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("node budget is checked from the degrees") {
    const auto eng = InnerProductEngine<double>(scalar_jacobi<double>(1, 0, 0), 3);
    const auto p = MatrixPolynomial<double>::monomial(1, 3);
    CHECK_NOTHROW(eng.inner_product(p, scalar_poly({0, 0, 1})));
    CHECK_THROWS_AS(eng.inner_product(p, p), budget_error);
    CHECK_THROWS_AS(monic_sequence(eng, 3), budget_error);
    CHECK_NOTHROW(monic_sequence(eng, 2));
}

TEST_CASE("Gauss-Jacobi rules integrate monomials exactly through degree 2k-1") {
    const std::vector<std::pair<oracle::Q, oracle::Q>> exps = {
        {0, 0}, {oracle::Q(1, 2), oracle::Q(1, 2)}, {1, 1}, {1, 0}, {oracle::Q(-1, 2), oracle::Q(-1, 2)},
        {oracle::Q(3, 2), oracle::Q(-1, 2)}, {oracle::Q(-1, 2), 2}};
    for (const auto& [a, b] : exps)
        for (int k : {1, 2, 5, 12, 24}) {
            CAPTURE(k);
            const auto ratios = oracle::moment_ratios(a, b, 2 * k - 1);
            const auto rd = gauss_jacobi<double>(k, static_cast<double>(a), static_cast<double>(b));
            const auto rq = gauss_jacobi<Quad>(k, to_real<Quad>(a), to_real<Quad>(b));
            const double mass = static_cast<double>(jacobi_mass<Quad>(to_real<Quad>(a), to_real<Quad>(b)));
            for (int d = 0; d <= 2 * k - 1; ++d) {
                double sd = 0;
                Quad sq = 0;
                for (int i = 0; i < k; ++i) {
                    sd += rd.w[i] * std::pow(rd.x[i], d);
                    sq += rq.w[i] * pow(rq.x[i], d);
                }
                const double exact = mass * static_cast<double>(ratios[d]);
                CHECK(std::abs(sd - exact) <= 1e-12 * mass);
                CHECK(std::abs(static_cast<double>(sq) - exact) <= 1e-15 * mass);
            }
            for (int i = 0; i + 1 < k; ++i) CHECK(rd.x[i] < rd.x[i + 1]);
        }
}

TEST_CASE("Legendre examples") {
    const auto eng = InnerProductEngine<double>::for_degree(scalar_jacobi<double>(1, 0, 0), 6);
    const auto s = monic_sequence(eng, 6);
    CHECK(s.M[0].is_monic());
    CHECK(s.M[0].degree() == 0);
    CHECK(s.M[2].coeff(0)(0, 0).real() == doctest::Approx(-1.0 / 3).epsilon(1e-14));
    CHECK(std::abs(s.M[2].coeff(1)(0, 0)) < 1e-15);

    const auto e = expand_in_monic(eng, s, scalar_poly({0, 0, 1}));
    CHECK(e.C[2](0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.C[0](0, 0).real() == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(std::abs(e.C[1](0, 0)) < 1e-15);
    CHECK(e.residual < 1e-14);

    const auto rec = recurrence_coeffs(eng, s);
    CHECK(rec.C[1](0, 0).real() == doctest::Approx(1.0 / 3).epsilon(1e-14));
    for (const auto& b : rec.B) CHECK(b.norm() < 1e-14);
}

TEST_CASE("scalar Jacobi monic polynomials match exact Gram-Schmidt") {
    const std::vector<std::pair<oracle::Q, oracle::Q>> exps = {
        {0, 0}, {oracle::Q(1, 2), oracle::Q(1, 2)}, {1, 1}, {oracle::Q(-1, 2), oracle::Q(3, 2)}};
    for (const auto& [a, b] : exps) {
        const auto exact = oracle::monic(a, b, 10);
        const auto norms = oracle::relative_norms(a, b, exact);

        const auto wd = scalar_jacobi<double>(1, static_cast<double>(a), static_cast<double>(b));
        const auto ed = InnerProductEngine<double>::for_degree(wd, 10);
        const auto sd = monic_sequence(ed, 10);
        const auto wq = scalar_jacobi<Quad>(1, to_real<Quad>(a), to_real<Quad>(b));
        const auto eq = InnerProductEngine<Quad>::for_degree(wq, 10);
        const auto sq = monic_sequence(eq, 10);
        const double mass = static_cast<double>(jacobi_mass(to_real<Quad>(a), to_real<Quad>(b)));
        for (int n = 0; n <= 10; ++n) {
            CAPTURE(n);
            CHECK(sd.M[n].is_monic());
            CHECK(sd.M[n].degree() == n);
            CHECK(max_coeff_error(sd.M[n], exact[n]) < 1e-12);
            CHECK(max_coeff_error(sq.M[n], exact[n]) < 1e-25);
            const double h = mass * static_cast<double>(norms[n]);
            CHECK(std::abs(sd.norms[n](0, 0).real() - h) < 1e-12 * h);
        }
        if (a == b)
            for (int n = 0; n <= 10; ++n)
                for (int k = (n + 1) % 2; k <= n; k += 2) CHECK(std::abs(sd.M[n].coeff(k)(0, 0)) < 1e-13);
    }
}

TEST_CASE("sesquilinearity identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = support::random_weight<double>(rng);
        const int n = w.N;
        const auto eng = InnerProductEngine<double>::for_degree(w, 6);
        const auto p = support::random_polynomial<double>(rng, n, 3);
        const auto q = support::random_polynomial<double>(rng, n, 3);
        const auto a = support::random_matrix<double>(rng, n);
        const auto pq = eng.inner_product(p, q);
        const double scale = pq.norm() * a.norm();
        CHECK((eng.inner_product(p * a, q) - a.adjoint() * pq).norm() <= 1e-12 * scale);
        CHECK((eng.inner_product(p, q * a) - pq * a).norm() <= 1e-12 * scale);
        CHECK((pq.adjoint() - eng.inner_product(q, p)).norm() <= 1e-12 * pq.norm());
        CHECK(is_positive_definite(eng.inner_product(p, p)));
    }
}

TEST_CASE("random factored weights through degree 20 in quad precision") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 12; ++trial) {
        const auto w = support::random_weight<Quad>(rng);
        CAPTURE(trial);
        const auto eng = InnerProductEngine<Quad>::for_degree(w, 20);
        const auto s = monic_sequence(eng, 20);
        CHECK(orthogonality_residual(eng, s) <= 1e-10);
        for (const auto& h : s.norms) {
            CHECK((h - h.adjoint()).norm() == 0);
            CHECK(min_eigenvalue(to_double(h)) > 0);
        }
        const auto rec = recurrence_coeffs(eng, s);
        for (const auto& r : rec.residual) CHECK(r <= 1e-9);
        for (int n = 0; n <= 20; ++n) {
            CHECK(s.M[n].is_monic());
            CHECK(s.M[n].degree() == n);
        }
    }
}

TEST_CASE("double engine holds the orthogonality bound through degree 10") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = support::random_weight<double>(rng);
        const auto eng = InnerProductEngine<double>::for_degree(w, 10);
        const auto s = monic_sequence(eng, 10);
        CHECK(orthogonality_residual(eng, s) <= 1e-10);
    }
}

TEST_CASE("expansion in the monic basis") {
    std::mt19937_64 rng(3);
    const auto w = support::random_weight<double>(rng);
    const auto eng = InnerProductEngine<double>::for_degree(w, 8);
    const auto s = monic_sequence(eng, 8);
    for (int k = 0; k <= 8; ++k) {
        const auto e = expand_in_monic(eng, s, s.M[k]);
        for (int n = 0; n <= k; ++n) {
            const auto target = n == k ? CMatrix<double>::identity(w.N) : CMatrix<double>(w.N);
            CHECK((e.C[n] - target).norm() < 1e-9);
        }
        const auto mono = expand_in_monic(eng, s, MatrixPolynomial<double>::monomial(w.N, k));
        CHECK((mono.C[k] - CMatrix<double>::identity(w.N)).norm() < 1e-9);
    }
    const auto p = support::random_polynomial<double>(rng, w.N, 8);
    CHECK(expand_in_monic(eng, s, p).residual <= 1e-10);
    CHECK_THROWS_AS(expand_in_monic(eng, s, support::random_polynomial<double>(rng, w.N, 9)), std::invalid_argument);
}

TEST_CASE("identity weight on two copies decouples") {
    const auto e1 = InnerProductEngine<double>::for_degree(scalar_jacobi<double>(1, 0.5, 1.5), 6);
    const auto e2 = InnerProductEngine<double>::for_degree(scalar_jacobi<double>(2, 0.5, 1.5), 6);
    const auto s1 = monic_sequence(e1, 6);
    const auto s2 = monic_sequence(e2, 6);
    const auto r1 = recurrence_coeffs(e1, s1);
    const auto r2 = recurrence_coeffs(e2, s2);
    for (size_t n = 0; n < r1.B.size(); ++n) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const std::complex<double> b = i == j ? r1.B[n](0, 0) : 0.0, c = i == j ? r1.C[n](0, 0) : 0.0;
                CHECK(std::abs(r2.B[n](i, j) - b) < 1e-14);
                CHECK(std::abs(r2.C[n](i, j) - c) < 1e-14);
            }
    }
    for (size_t n = 0; n < s1.M.size(); ++n)
        for (int k = 0; k <= static_cast<int>(n); ++k) {
            const auto c = s2.M[n].coeff(k);
            CHECK(std::abs(c(0, 0) - s1.M[n].coeff(k)(0, 0)) < 1e-14);
            CHECK(std::abs(c(1, 1) - s1.M[n].coeff(k)(0, 0)) < 1e-14);
            CHECK(std::abs(c(0, 1)) + std::abs(c(1, 0)) == 0);
        }
}

TEST_CASE("weight validation and positivity") {
    const auto t = MatrixPolynomial<double>::constant(CMatrix<double>::identity(2));
    CHECK_THROWS_AS(weight_from_factors(t, {1.0, 0.0}, 0.0, 0.0), weight_error);
    CHECK_THROWS_AS(weight_from_factors(t, {1.0, -2.0}, 0.0, 0.0), weight_error);
    CHECK_THROWS_AS(weight_from_factors(t, {1.0, 1.0}, -1.0, 0.0), weight_error);
    CHECK_THROWS_AS(weight_from_factors(t, {1.0}, 0.0, 0.0), weight_error);

    // Unimodular T (det = 1) with D the dimensions 1, 3, 5.
    CMatrix<double> t0 = CMatrix<double>::identity(3), t1(3), t2(3);
    t1(0, 1) = 1;
    t1(1, 2) = {0, 2};
    t2(0, 2) = -1;
    const auto w = weight_from_factors(MatrixPolynomial<double>(3, {t0, t1, t2}), {1.0, 3.0, 5.0}, 0.5, 0.5);
    for (int i = 1; i < 200; ++i) {
        const double x = -1 + i / 100.0;
        const auto wx = w(x);
        CHECK((wx - wx.adjoint()).norm() <= 1e-15 * wx.norm());
        CHECK(min_eigenvalue(wx) > 0);
    }

    // T = diag(1, x) is singular at 0 only; the Gram blocks stay positive definite.
    CMatrix<double> s0(2), s1(2);
    s0(0, 0) = 1;
    s1(1, 1) = 1;
    const auto ws = weight_from_factors(MatrixPolynomial<double>(2, {s0, s1}), {1.0, 2.0}, 0.0, 0.0);
    const auto es = InnerProductEngine<double>::for_degree(ws, 8);
    const auto seq = monic_sequence(es, 8);
    for (const auto& h : seq.norms) CHECK(min_eigenvalue(h) > 0);

    // det T identically zero: the first Gram block is singular.
    CMatrix<double> r0(2);
    r0(0, 0) = r0(0, 1) = r0(1, 0) = r0(1, 1) = 1;
    const auto wr = weight_from_factors(MatrixPolynomial<double>(2, {r0}), {1.0, 1.0}, 0.0, 0.0);
    try {
        monic_sequence(InnerProductEngine<double>::for_degree(wr, 3), 3);
        FAIL("expected singular_gram_error");
    } catch (const singular_gram_error& e) {
        CHECK(e.degree == 0);
    }
}

TEST_CASE("exact number parsing") {
    CHECK(parse_exact("3") == Exact(3));
    CHECK(parse_exact("-1/2") == Exact(-1) / 2);
    CHECK(parse_exact("0.125") == Exact(1) / 8);
    CHECK(parse_exact("-2.5e-3") == Exact(-1) / 400);
    CHECK(parse_exact("1E2") == Exact(100));
    CHECK(parse_exact(".5") == Exact(1) / 2);
    CHECK(parse_exact("010/08") == Exact(5) / 4);
    CHECK_THROWS_AS(parse_exact("abc"), schema_error);
    CHECK_THROWS_AS(parse_exact("1/0"), schema_error);
    CHECK_THROWS_AS(parse_exact(""), schema_error);
}

TEST_CASE("weight specification documents") {
    const auto spec = parse_weight_spec(R"({
        "N": 2, "alpha": "1/2", "beta": 0.5, "D": [1, "3"],
        "T": [[[1, 0], [0, 1]], [[0, {"re": "1/2", "im": -1}], [0, 0]]]
    })");
    CHECK(spec.N == 2);
    CHECK(spec.alpha == Exact(1) / 2);
    CHECK(spec.beta == Exact(1) / 2);
    CHECK(spec.T.size() == 2);
    CHECK(spec.T[1][1].im == Exact(-1));
    const auto w = to_weight<Quad>(spec);
    CHECK(w.T.degree() == 1);
    CHECK(w.D[1] == Quad(3));

    CHECK_THROWS_AS(parse_weight_spec("[1]"), schema_error);
    CHECK_THROWS_AS(parse_weight_spec("{"), schema_error);
    CHECK_THROWS_AS(parse_weight_spec(R"({"N": 1, "alpha": 0, "beta": 0, "D": [1]})"), schema_error);
    CHECK_THROWS_AS(parse_weight_spec(R"({"N": 1, "alpha": 0, "beta": 0, "D": [1], "T": [[[1, 2]]]})"),
                    schema_error);
    CHECK_THROWS_AS(parse_weight_spec(R"({"N": 1, "alpha": 0, "beta": 0, "D": [1], "T": [[[1]]], "x": 1})"),
                    schema_error);
    const auto bad = parse_weight_spec(R"({"N": 1, "alpha": 0, "beta": 0, "D": [0], "T": [[[1]]]})");
    CHECK_THROWS_AS(to_weight<double>(bad), weight_error);
}
