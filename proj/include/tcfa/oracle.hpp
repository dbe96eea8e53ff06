#pragma once

#include <map>

#include "tcfa/symfunc.hpp"

namespace tcfa {

struct CountQuery {
    int q = 2;  // prime power <= 64
    int d = 1;  // dimension >= 1
    int k = 0;  // number of points <= 10
    int n = 2;  // truncation level >= 2

    void validate() const;
};

// Number of k-tuples of points in affine d-space over F_q with every point of
// multiplicity < n: sum over set partitions of [k] with blocks of size <= n-1
// of the falling factorial q^d (q^d - 1) ... (q^d - #blocks + 1).
Int point_count(const CountQuery& query);

// The oracle beneath the oracle: literal enumeration of all q^{dk} maps
// (guarded to ~10^7), counting those with every fiber of size < n.
Int point_count_bruteforce(const CountQuery& query);

// The counting polynomial in q (exponent -> coefficient), via exact Lagrange
// interpolation at dk+1 prime powers. Integer coefficients, degree dk.
std::map<int, Int> point_count_polynomial(int d, int k, int n);

// Unsigned Stirling numbers of the first kind, c(k,j) = c(k-1,j-1) + (k-1)c(k-1,j).
Int stirling_unsigned(int k, int j);

// Frobenius character of the top homology of the order complex of the proper
// part of the partition lattice on k elements, 2 <= k <= 5; dimension (k-1)!.
// Computed by explicit simplicial homology with its symmetric group action,
// independently of the bar pipeline.
SymFunc partition_lattice_character(int k);

}  // namespace tcfa
