#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "tcfa/rational.hpp"

namespace tcfa {

/// An integer partition: weakly decreasing list of positive parts.
/// The empty partition (of 0) is allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int size() const;    // sum of parts
    int length() const;  // number of parts

    bool operator==(const Partition& o) const { return parts == o.parts; }

    // Canonical bracket form "[3,1,1]"; "[]" for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& s);
};

// Canonical order: by size first, then reverse-lexicographic within a size,
// so for size k the partition [k] comes first and [1,...,1] last. This order
// is used everywhere (map keys, serialization) for determinism.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of k in canonical order. Cached.
const std::vector<Partition>& partitions_of(int k);

// Partitions of k with every part <= max_part, canonical order.
std::vector<Partition> partitions_of_bounded(int k, int max_part);

// Order of the centralizer of a permutation of cycle type mu:
// prod_i i^{m_i} * m_i!.
Int z_order(const Partition& mu);

Partition conjugate(const Partition& lambda);

// Multiply every part by r (cycle-type of a power / plethysm by p_r).
Partition stretch(const Partition& mu, int r);

// Irreducible symmetric group character chi^lambda(mu) via
// Murnaghan-Nakayama. Memoized; exact.
long long sym_character(const Partition& lambda, const Partition& mu);

}  // namespace tcfa
