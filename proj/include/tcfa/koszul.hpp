#pragma once

#include "tcfa/fbchain.hpp"

namespace tcfa {

class CalibrationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Cohomology character of the Koszul-dual twisted coLie coalgebra of the
/// n-truncated algebra, in two gradings: raw (slice k at w = dk, c within the
/// support bounds) and renormalized (per-piece regrading c -> c-2d+1,
/// w -> w-d) — the currency in which the affine space is the unit input.
struct LieDualChar {
    int n = 2, d = 1, K = 1;
    FBCharacter char_raw{1};
    FBCharacter renormalized{1};
};

// n = 2: closed form. The bar homology character is the regular
// representation h_1^k placed at ((2d-1)k, dk); its plethystic logarithm is
// the cofree coLie character on one generator: slice k concentrated at
// ((2d-1)k, dk) with dimension (k-1)!.
LieDualChar a2_character(int d, int K);

// General n: plethystic logarithm of the equivariant bar homology character.
// Violations of the structural invariants (degree-1 slice, vanishing window,
// support bounds, effectiveness) throw CalibrationError: they signal a
// sign/shift bug, not bad input.
LieDualChar an_character(int n, int d, int K);

// Renormalized operator character truncated to graded degrees <= m (the
// coLie structure is trivial; the character is the whole datum). m >= 2
// requires n = 2; m = 1 is available for every n.
FBCharacter operator_lie_char(int n, int d, int m, int K);

}  // namespace tcfa
