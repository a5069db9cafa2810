// Vector partition functions: a memoized generic counter plus closed forms
// for the sets that appear in the Spin(7)/G2 and F4/Spin(9) branching rules.
#pragma once

#include "gelfand/rootsys.hpp"

#include <array>
#include <cstddef>
#include <unordered_map>
#include <vector>

namespace gelfand {

// Finite multiset of doubled vectors lying in an open half-space.
class VectorMultiset {
public:
    // Throws std::invalid_argument unless <witness, a> > 0 for every a.
    VectorMultiset(std::vector<IVec> vectors, IVec witness);

    // Tries the given candidates, then the sum of the vectors, then a
    // lexicographic witness.
    static VectorMultiset with_found_witness(std::vector<IVec> vectors,
                                             const std::vector<IVec>& candidates = {});

    const std::vector<IVec>& vectors() const { return vectors_; }
    const IVec& witness() const { return witness_; }
    int dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }

private:
    std::vector<IVec> vectors_;
    IVec witness_;
    int dim_ = 0;
};

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept;
};

// Memoized p_A. Recursion peels the lexicographically largest vector first:
// p_{A_i}(v) = sum_k p_{A_{i+1}}(v - k a_i). Single owner.
class PartitionFunction {
public:
    explicit PartitionFunction(VectorMultiset a);

    long long operator()(const IVec& v);
    const VectorMultiset& set() const { return set_; }
    std::size_t memo_size() const;

private:
    long long count(std::size_t i, const IVec& v);

    VectorMultiset set_;
    std::vector<IVec> order_;        // vectors sorted descending
    std::vector<long long> height_;  // <witness, a> for each sorted vector
    std::vector<std::unordered_map<IVec, long long, IVecHash>> memo_;
};

// One-shot convenience wrapper around PartitionFunction.
long long partition_generic(const VectorMultiset& a, const IVec& v);

// {eps1, eps2, eps3} in the G2 plane (Bourbaki coordinates, doubled), where
// eps1 = varpi1 = (0,-1,1), eps2 = (-1,0,1), eps3 = alpha1 = (1,-1,0).
VectorMultiset spin7_a_set();
// v = a eps2 + b eps3 has min(a,b)+1 representations when a,b >= 0.
long long partition_spin7_closed(const IVec& v);
bool spin7_support(const IVec& v);

// 1/2(eps1 +- eps2 +- eps3 +- eps4), doubled.
VectorMultiset f4_a_set();
long long partition_f4_A_closed(const IVec& lambda);
bool f4_A_support(const IVec& lambda);

// Number of integer points t with 0 <= t_i <= m_i and sum t_i = s.
long long lattice_box_count(const std::array<long long, 4>& m, long long s);

// The positive roots of F4 outside B4 for the chamber containing omega3, omega4.
VectorMultiset f4_b_set();
long long partition_f4_B_closed(const IVec& lambda);
bool f4_B_support(const IVec& lambda);

// {eps_i +- eps_n : i < n}, doubled.
VectorMultiset sp_sigma_set(int n);

}  // namespace gelfand
