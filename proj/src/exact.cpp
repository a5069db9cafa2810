#include "gelfand/exact.hpp"

#include <stdexcept>
#include <utility>

namespace gelfand {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m, int ncols) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c].numerator() != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const Rat piv = m[r][c];
        for (auto& x : m[r]) x /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].numerator() == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RatVec> solve_exact(const RatMat& a, const RatVec& b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("solve_exact: shape mismatch");
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    RatMat aug(m);
    for (std::size_t i = 0; i < m; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto piv = rref(aug, n);
    if (static_cast<int>(piv.size()) != n)
        throw std::invalid_argument("solve_exact: columns are dependent");
    for (std::size_t i = piv.size(); i < m; ++i)
        if (aug[i][n].numerator() != 0) return std::nullopt;
    RatVec x(n);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][n];
    return x;
}

RatMat inverse_exact(const RatMat& a) {
    const std::size_t n = a.size();
    RatMat aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].resize(2 * n, Rat(0));
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug, static_cast<int>(n));
    if (piv.size() != n) throw std::domain_error("inverse_exact: singular matrix");
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

int rank_exact(RatMat a) {
    if (a.empty()) return 0;
    return static_cast<int>(rref(a, static_cast<int>(a[0].size())).size());
}

RatMat matmul(const RatMat& a, const RatMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    RatMat c(n, RatVec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].numerator() == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

}  // namespace gelfand
