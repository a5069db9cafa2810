#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <vector>

namespace gelfand {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

// Solve A x = b exactly. A is m×n with independent columns; returns nullopt
// when b is not in the column span.
std::optional<RatVec> solve_exact(const RatMat& a, const RatVec& b);

// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
RatMat inverse_exact(const RatMat& a);

// Rank by exact row reduction.
int rank_exact(RatMat a);

RatMat matmul(const RatMat& a, const RatMat& b);

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }
// boost::rational compared against a plain integer with == or != recurses
// forever under C++20 rewritten comparisons; compare numerators instead.
inline bool is_zero(const Rat& r) { return r.numerator() == 0; }

}  // namespace gelfand
