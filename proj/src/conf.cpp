#include "tcfa/conf.hpp"

#include <algorithm>
#include <limits>

namespace tcfa {

void SpaceCohomology::validate() const {
    if (d < 1) throw InvalidInput("space: dimension must be >= 1");
    for (const auto& cl : classes) {
        if (cl.dim < 1) throw InvalidInput("space: class dimensions must be positive");
        if (cl.c < 0) throw InvalidInput("space: cohomological degrees must be >= 0");
    }
    if (irreducible) {
        int found = 0;
        for (const auto& cl : classes)
            if (cl.c == 0) {
                if (cl.w != 0 || cl.dim != 1)
                    throw InvalidInput("space: irreducible requires the degree-0 class to be (0,0,1)");
                ++found;
            }
        if (found != 1)
            throw InvalidInput("space: irreducible requires exactly one class at c = 0");
    }
    if (top_triv >= 1) {
        for (const auto& cl : classes)
            if (cl.c == 2 * d && cl.w == d)
                throw InvalidInput(
                    "space: top_triv >= 1 requires a non-proper space (no class at (2d, d))");
    }
    if (top_triv < 0) throw InvalidInput("space: top_triv must be >= 0");
    if (gap_s < 0) throw InvalidInput("space: cohomology_gap_s must be >= 0");
    for (const auto& cl : classes)
        if (cl.c > 0 && cl.c < gap_s)
            throw InvalidInput("space: a class contradicts the asserted cohomology gap");
}

std::optional<int> SpaceCohomology::derived_gap() const {
    int smallest = std::numeric_limits<int>::max();
    for (const auto& cl : classes)
        if (cl.c > 0) smallest = std::min(smallest, cl.c);
    if (smallest == std::numeric_limits<int>::max()) return std::nullopt;
    return smallest;
}

int SpaceCohomology::dim_at(int c) const {
    int total = 0;
    for (const auto& cl : classes)
        if (cl.c == c) total += cl.dim;
    return total;
}

FBCharacter SpaceCohomology::degree_one_character(int K) const {
    FBCharacter f(K);
    for (const auto& cl : classes) f.add(1, cl.c, cl.w, SymFunc::h(1) * Rat(cl.dim));
    return f;
}

SpaceCohomology SpaceCohomology::affine_space(int d) {
    SpaceCohomology s;
    s.d = d;
    s.classes = {{0, 0, 1}};
    s.irreducible = true;
    s.trivial_multiplication = true;
    s.top_triv = std::numeric_limits<int>::max() / 2;  // all operations vanish
    s.gap_s = 0;
    return s;
}

ConfCohomology conf_cohomology(const SpaceCohomology& space, int n, int K, bool with_unit) {
    space.validate();
    if (n < 2) throw InvalidInput("conf: truncation level n must be >= 2");
    if (!space.trivial_multiplication)
        throw InvalidInput(
            "conf: the space must assert trivial_multiplication (trivial algebra structure on "
            "compactly supported cochains); the product formula is not valid without it");
    LieDualChar dual = (n == 2) ? a2_character(space.d, K) : an_character(n, space.d, K);
    // tensor the space classes into every slice of the renormalized dual
    FBCharacter input(K);
    for (const auto& [k, slice] : dual.renormalized.slices())
        for (const auto& [cw, f] : slice)
            for (const auto& cl : space.classes)
                input.add(k, cw.c + cl.c, cw.w + cl.w, f * Rat(cl.dim));
    FBCharacter character = sym_exp(input);
    character.require_effective("conf_cohomology");
    // degree-1 slice must reproduce the space's own classes
    FBCharacter expected1 = space.degree_one_character(K);
    if (!(character.slice(1) == expected1.slice(1)))
        throw std::logic_error("conf_cohomology: degree-1 slice does not match the input classes");
    if (!with_unit) character = character.drop_degree_zero();
    ConfCohomology out;
    out.n = n;
    out.K = K;
    out.space = space;
    out.character = std::move(character);
    return out;
}

std::map<int, long long> poincare(const ConfCohomology& cc, int k) {
    if (k > cc.K) throw InvalidInput("poincare: k exceeds the truncation");
    std::map<int, long long> out;
    for (const auto& [cw, d] : dimension(cc.character, k)) out[cw.c] += d;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<int, Int> e_polynomial(const ConfCohomology& cc, int k) {
    if (k > cc.K) throw InvalidInput("e_polynomial: k exceeds the truncation");
    std::map<int, Int> out;
    for (const auto& [cw, d] : dimension(cc.character, k)) {
        Int term = static_cast<long>(d);
        if (cw.c % 2 != 0) term = -term;
        out[cc.space.d * k - cw.w] += term;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace tcfa
