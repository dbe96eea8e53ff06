#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "tcfa/charring.hpp"
#include "tcfa/linalg.hpp"

namespace tcfa {

/// Basis element of the reduced bar complex: an ordered sequence of disjoint
/// nonempty blocks covering {0,...,k-1}, every block of size <= n-1 for the
/// ambient truncation level n. Blocks are stored sorted; the sequence order
/// is meaningful.
struct BarWord {
    std::vector<std::vector<int>> blocks;

    int k() const;
    int length() const { return static_cast<int>(blocks.size()); }
    auto operator<=>(const BarWord&) const = default;
};

// Relabel by perm (element e -> perm[e]) and re-sort within blocks.
BarWord relabel(const BarWord& w, const std::vector<int>& perm);

/// One cohomological stratum of the degree-k bar complex: all words with s
/// blocks, living at c = 2dk - s, w = dk (bar length s determines c).
struct BarStratum {
    int s = 0, c = 0, w = 0;
    std::vector<BarWord> basis;    // sorted, canonical order
    std::vector<SparseVec> diff;   // column j = differential of basis[j],
                                   // coordinates in the (s-1)-stratum basis

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const BarWord& w) const;  // -1 when absent
};

/// The reduced bar complex of the truncated twisted polynomial algebra with
/// one generator at (k,c,w) = (1, 2d, d) and relations in graded degree n,
/// built per graded degree k <= K. The differential is the alternating sum
/// of adjacent-block merges, the i-th merge with sign (-1)^i, a merge of
/// total size >= n giving zero.
class FBComplex {
public:
    static FBComplex bar_complex(int n, int d, int K);

    int n() const { return n_; }
    int d() const { return d_; }
    int K() const { return K_; }

    // Strata of graded degree k, keyed by bar length s (c = 2dk - s).
    const std::map<int, BarStratum>& degree(int k) const;

    // Permutation of basis indices induced by relabeling with perm.
    std::vector<int> basis_permutation(int k, int s, const std::vector<int>& perm) const;

    // Character (as fixed-point counts) of the S_k action on the stratum.
    SymFunc stratum_character(int k, int s) const;

    // Full chain-level character: every stratum placed at its (c,w).
    FBCharacter chain_character() const;

    // Checks d^2 = 0 on every word; throws std::logic_error on failure.
    void check_differential_squares_to_zero() const;

private:
    int n_ = 2, d_ = 1, K_ = 1;
    std::vector<std::map<int, BarStratum>> degrees_;  // index k
};

struct HomologyPiece {
    int rank = 0;
    SymFunc character;                   // effective Frobenius character
    std::vector<SparseVec> representatives;  // cycle representatives, one per rank
};

struct HomologyResult {
    int n = 0, d = 0, K = 0;
    std::map<std::tuple<int, int, int>, HomologyPiece> pieces;  // (k,c,w)

    const HomologyPiece* piece(int k, int c, int w) const;
    // Homology character of graded degree k as a map (c,w) -> SymFunc.
    std::map<CW, SymFunc> character(int k) const;
    // All homology placed into one FBCharacter, plus the unit at k=0.
    FBCharacter total_character(bool with_unit) const;
};

// Exact rational homology of every graded degree, with S_k-equivariant
// characters obtained by tracing conjugacy-class representatives on reduced
// echelon bases of kernels and images.
HomologyResult homology(const FBComplex& cx);

std::map<CW, SymFunc> homology_character(const HomologyResult& h, int k);

// Conjugacy class representative with cycle type mu on {0,...,k-1}.
std::vector<int> class_representative(const Partition& mu, int k);

}  // namespace tcfa
