#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "tcfa/symfunc.hpp"

namespace tcfa {

/// (cohomological degree, weight) bidegree of a slice.
struct CW {
    int c = 0;
    int w = 0;
    auto operator<=>(const CW&) const = default;
};

struct TriDegree {
    int k = 0;  // graded (FB) degree, >= 0
    int c = 0;  // cohomological degree
    int w = 0;  // weight (Tate-twist bookkeeping)
};

class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graded-degree guardrail (default 9, overridable via TCFA_MAX_DEGREE_CAP).
int degree_cap();

/// Character of an FB-graded object: finitely supported map
/// (k, c, w) -> virtual symmetric function of degree k, complete up to the
/// mandatory graded-degree truncation bound max_degree. Operations never
/// extrapolate beyond the truncation.
class FBCharacter {
public:
    using Slice = std::map<CW, SymFunc>;  // one graded degree, keyed by (c,w)

    explicit FBCharacter(int max_degree);

    // The unit character: 1 at (k,c,w) = (0,0,0).
    static FBCharacter unit(int max_degree);

    int max_degree() const { return max_degree_; }

    // Adds f (a degree-k symmetric function) at (k,c,w). Slices beyond the
    // truncation are silently dropped; zero pieces are pruned.
    void add(int k, int c, int w, const SymFunc& f);

    const std::map<int, Slice>& slices() const { return slices_; }
    Slice slice(int k) const;  // empty map when absent
    SymFunc piece(int k, int c, int w) const;
    bool is_zero() const { return slices_.empty(); }

    FBCharacter operator+(const FBCharacter& o) const;
    FBCharacter operator-(const FBCharacter& o) const;
    FBCharacter operator*(const Rat& scalar) const;
    bool operator==(const FBCharacter& o) const;

    FBCharacter truncated(int new_max) const;
    FBCharacter drop_degree_zero() const;

    // Regrade every piece: (k,c,w) -> (k, c + dc, w + dw).
    FBCharacter shifted(int dc, int dw) const;

    // Regrade slice k by k-proportional offsets: (c,w) -> (c + k*dc, w + k*dw).
    FBCharacter shifted_per_degree(int dc, int dw) const;

    // Every Schur coefficient of every piece is a non-negative integer.
    bool effective() const;
    void require_effective(const std::string& context) const;

private:
    int max_degree_;
    std::map<int, Slice> slices_;
};

// Day-convolution product of characters: symmetric functions multiply,
// (c,w) add, graded degrees add; truncated at the smaller max_degree.
FBCharacter induction_product(const FBCharacter& f, const FBCharacter& g);

// r-th Adams operation with Koszul signs: a slice at (k,c,w) maps to
// (-1)^{(r-1)c} p_r-plethysm at (rk, rc, rw).
FBCharacter super_adams(int r, const FBCharacter& f);

// Plethystic exponential exp(sum_r super_adams(r,f)/r). Requires f supported
// in graded degrees >= 1; the result carries the unit at (0,0,0).
FBCharacter sym_exp(const FBCharacter& f);

// Inverse of sym_exp by degreewise triangular inversion. Requires the
// degree-0 slice of g to be exactly the unit.
FBCharacter sym_log(const FBCharacter& g);

// Character of V^{tensor k} with the permutation action, for v supported at
// graded degree 1 (the degree-k slice of sym_exp(v)).
FBCharacter::Slice tensor_power_character(const FBCharacter& v, int k);

// Dimensions of the slice at graded degree k, per (c,w). Virtual inputs give
// (possibly negative) integers.
std::map<CW, long long> dimension(const FBCharacter& f, int k);

}  // namespace tcfa
