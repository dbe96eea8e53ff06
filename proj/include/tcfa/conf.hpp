#pragma once

#include <optional>

#include "tcfa/koszul.hpp"

namespace tcfa {

struct SpaceClass {
    int c = 0;
    int w = 0;
    int dim = 1;
};

/// User-supplied cohomology of the input space in renormalized currency
/// (shifted Borel-Moore): the affine space of dimension d is {(0,0,1)}.
struct SpaceCohomology {
    int d = 1;
    std::vector<SpaceClass> classes;
    bool irreducible = false;
    bool trivial_multiplication = false;
    int top_triv = 0;  // 0 = unasserted
    int gap_s = 0;     // user-asserted gap; 0 = unasserted

    void validate() const;  // throws InvalidInput on inconsistent flags

    // Largest s with no class in cohomological degrees (0, s); nullopt when
    // there is no positive-degree class at all (unbounded gap).
    std::optional<int> derived_gap() const;

    // Total dimension of classes at cohomological degree c (all weights).
    int dim_at(int c) const;

    // The classes as a graded-degree-1 character.
    FBCharacter degree_one_character(int K) const;

    static SpaceCohomology affine_space(int d);
};

struct ConfCohomology {
    int n = 2;
    int K = 1;
    SpaceCohomology space;
    FBCharacter character{1};  // effective; unit at k=0 unless dropped
};

// Equivariant cohomology character of the generalized configuration spaces
// of the space, valid under the trivial-multiplication hypothesis:
// sym_exp of (space classes) x (renormalized dual character).
ConfCohomology conf_cohomology(const SpaceCohomology& space, int n, int K, bool with_unit = true);

// Poincare polynomial of graded degree k: coefficient of t^c.
std::map<int, long long> poincare(const ConfCohomology& cc, int k);

// Weight-graded Euler characteristic q^{dk} * sum (-1)^c dim_{c,w} q^{-w},
// as exponent -> coefficient. For the affine space this equals the number of
// F_q-points of the generalized configuration space.
std::map<int, Int> e_polynomial(const ConfCohomology& cc, int k);

}  // namespace tcfa
