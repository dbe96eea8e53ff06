#pragma once

#include <optional>
#include <string>

#include "tcfa/conf.hpp"

namespace tcfa {

/// Smallest cone through the origin in the (k,c)-plane containing a
/// character's support; the support of sym_exp stays inside it, which is what
/// turns deletion of coLie pieces into vanishing lines c = b*k.
struct SupportCone {
    std::vector<std::pair<int, int>> points;  // (k, c) with a nonzero piece
    Rat b_lower, b_upper;                     // min and max of c/k, attained
    std::string claim;  // certified statement about sym_exp of the input
};

SupportCone support_cone(const FBCharacter& f);

struct GeneratorWindow {
    int lo = 1;
    int hi = 0;  // inclusive; hi < lo means empty
};

struct StabilityReport {
    std::string mode;  // iterate | toptriv | figen
    int n = 2;
    int d = 1;
    int c0 = -1;
    int m = -1;
    int i = -1;
    std::optional<int> s;  // cohomology gap actually used; nullopt = unbounded
    Rat b = 0;
    std::string vanishing;        // rendered vanishing statement
    std::string acting_algebra;   // figen mode
    std::optional<GeneratorWindow> window;
    std::optional<FBCharacter> ch_operators;
    std::optional<FBCharacter> ch_generators;
    std::optional<FBCharacter> quotient;
    bool exact = false;      // split/quotient characters were computed
    bool certified = false;  // vanishing verified on every computed slice
    std::vector<std::string> notes;
};

// Iterative derived-indecomposables bound b = min((2d-1)(n-1)/n, c0+1);
// under trivial multiplication also the exact quotient character (sym_exp of
// the input with the degree-1 pieces at c <= c0 deleted) with a checked
// vanishing certificate below c = b*k.
StabilityReport iterate_indecomposables(const SpaceCohomology& space, int n, int c0, int K);

// Graded-degree window for generators in cohomological degree i:
// [1, i-c0] when c0+1 <= (2d-1)(n-1)/n, else [1, floor((i-c0)/(B-c0))].
GeneratorWindow generator_window(const SpaceCohomology& space, int n, int c0, int i);

// Free-module splitting over the operator algebra of level m (n = 2):
// ch O = sym_exp(operator_lie_char), and under trivial multiplication
// ch G = ch A / ch O by exact triangular division, certified below
// c = b*k with b = min((2d-1)m/(m+1), s).
StabilityReport toptriv_split(const SpaceCohomology& space, int m, int K);

// Character of the iterated relative quotient (factoring out the operator
// algebras level by level); equals toptriv_split's generator character.
FBCharacter iterated_quotient_char(const SpaceCohomology& space, int m, int K);

// Qualitative finite-generation statement with the acting algebra (Sym for
// even c0, Alt for odd) and, under trivial multiplication, the generator
// window.
StabilityReport finite_generation_report(const SpaceCohomology& space, int n, int c0, int i);

// Exact triangular division in the character ring; O must have unit slice at
// degree 0. The quotient satisfies induction_product(O, result) = A.
FBCharacter divide_characters(const FBCharacter& A, const FBCharacter& O);

}  // namespace tcfa
