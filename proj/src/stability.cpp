#include "tcfa/stability.hpp"

#include <sstream>

namespace tcfa {

SupportCone support_cone(const FBCharacter& f) {
    SupportCone cone;
    bool first = true;
    for (const auto& [k, slice] : f.slices()) {
        if (k == 0) throw InvalidInput("support_cone: input must be supported at k >= 1");
        for (const auto& [cw, fn] : slice) {
            (void)fn;
            cone.points.emplace_back(k, cw.c);
            Rat ratio = Rat(cw.c) / Rat(k);
            if (first) {
                cone.b_lower = cone.b_upper = ratio;
                first = false;
            } else {
                if (ratio < cone.b_lower) cone.b_lower = ratio;
                if (ratio > cone.b_upper) cone.b_upper = ratio;
            }
        }
    }
    if (first) throw InvalidInput("support_cone: empty support");
    std::ostringstream claim;
    claim << "support of sym_exp at graded degree k lies in c within ["
          << rat_to_string(cone.b_lower) << "*k, " << rat_to_string(cone.b_upper) << "*k]";
    cone.claim = claim.str();
    return cone;
}

namespace {

Rat first_flavor_bound(int n, int d, int c0) {
    Rat line = Rat((2 * d - 1) * (n - 1)) / Rat(n);
    Rat cap = Rat(c0 + 1);
    return std::min(line, cap);
}

std::string render_fraction(const Rat& b) {
    return rat_to_string(b);
}

// Every nonzero piece must satisfy c >= b*k; throws when the certificate
// fails (a convention bug, not bad input).
void certify_above_line(const FBCharacter& f, const Rat& b, const std::string& what) {
    for (const auto& [k, slice] : f.slices()) {
        if (k == 0) continue;
        for (const auto& [cw, fn] : slice) {
            (void)fn;
            if (Rat(cw.c) < b * Rat(k))
                throw std::logic_error(what + ": support found strictly below the line c = " +
                                       render_fraction(b) + "*k at (k=" + std::to_string(k) +
                                       ", c=" + std::to_string(cw.c) + ")");
        }
    }
}

FBCharacter conf_input_character(const SpaceCohomology& space, int n, int K) {
    LieDualChar dual = (n == 2) ? a2_character(space.d, K) : an_character(n, space.d, K);
    FBCharacter input(K);
    for (const auto& [k, slice] : dual.renormalized.slices())
        for (const auto& [cw, f] : slice)
            for (const auto& cl : space.classes)
                input.add(k, cw.c + cl.c, cw.w + cl.w, f * Rat(cl.dim));
    return input;
}

}  // namespace

StabilityReport iterate_indecomposables(const SpaceCohomology& space, int n, int c0, int K) {
    space.validate();
    if (n < 2) throw InvalidInput("iterate: n must be >= 2");
    if (c0 < 0) throw InvalidInput("iterate: c0 must be >= 0");
    StabilityReport rep;
    rep.mode = "iterate";
    rep.n = n;
    rep.d = space.d;
    rep.c0 = c0;
    rep.b = first_flavor_bound(n, space.d, c0);
    {
        std::ostringstream out;
        out << "H^c(A^(" << c0 << "))_k = 0 for c < " << render_fraction(rep.b) << "*k";
        rep.vanishing = out.str();
    }
    rep.notes.push_back("every graded piece of the quotient is finite dimensional");
    if (space.trivial_multiplication) {
        FBCharacter input = conf_input_character(space, n, K);
        // delete the degree-1 pieces at c <= c0 (the acting algebras)
        FBCharacter pruned(K);
        for (const auto& [k, slice] : input.slices())
            for (const auto& [cw, f] : slice) {
                if (k == 1 && cw.c <= c0) continue;
                pruned.add(k, cw.c, cw.w, f);
            }
        FBCharacter quotient = sym_exp(pruned);
        quotient.require_effective("iterate_indecomposables");
        certify_above_line(quotient, rep.b, "iterate_indecomposables");
        rep.quotient = std::move(quotient);
        rep.exact = true;
        rep.certified = true;
    } else {
        rep.notes.push_back(
            "space lacks trivial_multiplication: bound and vanishing window reported only, no "
            "character computed");
    }
    return rep;
}

GeneratorWindow generator_window(const SpaceCohomology& space, int n, int c0, int i) {
    space.validate();
    if (n < 2) throw InvalidInput("generator_window: n must be >= 2");
    if (c0 < 0 || i < 0) throw InvalidInput("generator_window: c0 and i must be >= 0");
    if (!space.trivial_multiplication)
        throw InvalidInput("generator_window: the free-module hypothesis requires "
                           "trivial_multiplication");
    Rat line = Rat((2 * space.d - 1) * (n - 1)) / Rat(n);
    if (Rat(c0) >= line)
        throw InvalidInput("generator_window: requires c0 < (2d-1)(n-1)/n");
    GeneratorWindow w;
    w.lo = 1;
    if (Rat(c0 + 1) <= line) {
        w.hi = i - c0;
    } else {
        // floor((i - c0) / (line - c0))
        Rat bound = Rat(i - c0) / (line - Rat(c0));
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
        w.hi = static_cast<int>(fl.get_si());
    }
    return w;
}

StabilityReport toptriv_split(const SpaceCohomology& space, int m, int K) {
    space.validate();
    if (m < 1) throw InvalidInput("toptriv: m must be >= 1");
    if (space.top_triv < m)
        throw InvalidInput("toptriv: the space does not assert top_triv >= m");
    if (!space.irreducible) throw InvalidInput("toptriv: the space must be irreducible");
    StabilityReport rep;
    rep.mode = "toptriv";
    rep.n = 2;
    rep.d = space.d;
    rep.m = m;
    int d = space.d;
    std::optional<int> gap = space.derived_gap();
    rep.s = gap;
    Rat line = Rat((2 * d - 1) * m) / Rat(m + 1);
    rep.b = gap ? std::min(line, Rat(*gap)) : line;
    {
        Rat inv = Rat(1) / rep.b;  // degrees k <= (1/b) c
        std::ostringstream out;
        out << "H^c(G)_k = 0 for c < " << render_fraction(rep.b)
            << "*k; generators of H^c live in graded degrees <= ";
        if (inv.get_den() == 1)
            out << inv.get_num() << "c";
        else
            out << "(" << render_fraction(inv) << ")c";
        rep.vanishing = out.str();
    }
    FBCharacter ops = sym_exp(operator_lie_char(2, d, m, K));
    ops.require_effective("toptriv_split operators");
    rep.ch_operators = ops;
    if (space.trivial_multiplication) {
        ConfCohomology conf = conf_cohomology(space, 2, K);
        FBCharacter gen = divide_characters(conf.character, ops);
        gen.require_effective("toptriv_split generators");
        certify_above_line(gen, rep.b, "toptriv_split");
        if (!(induction_product(ops, gen) == conf.character))
            throw std::logic_error("toptriv_split: operator * generator product does not "
                                   "reproduce the full character");
        rep.ch_generators = std::move(gen);
        rep.exact = true;
        rep.certified = true;
    } else {
        std::ostringstream low, high;
        low << "generator coLie support for k <= " << m << ": c in [(2d-1)(k-1)+1, (2d-1)k], d="
            << d;
        high << "generator coLie support for k > " << m << ": c in [(2d-1)(k-1), (2d-1)k], d="
             << d;
        rep.notes.push_back(low.str());
        rep.notes.push_back(high.str());
        rep.notes.push_back(
            "space lacks trivial_multiplication: operator algebra and support windows reported "
            "only");
    }
    return rep;
}

FBCharacter iterated_quotient_char(const SpaceCohomology& space, int m, int K) {
    space.validate();
    if (m < 1) throw InvalidInput("iterated quotient: m must be >= 1");
    if (space.top_triv < m)
        throw InvalidInput("iterated quotient: the space does not assert top_triv >= m");
    if (!space.irreducible)
        throw InvalidInput("iterated quotient: the space must be irreducible");
    if (!space.trivial_multiplication)
        throw InvalidInput("iterated quotient: requires trivial_multiplication");
    ConfCohomology conf = conf_cohomology(space, 2, K);
    FBCharacter current = conf.character;
    LieDualChar dual = a2_character(space.d, std::min(m, K));
    for (int level = 1; level <= std::min(m, K); ++level) {
        FBCharacter one_level(K);
        for (const auto& [cw, f] : dual.renormalized.slice(level))
            one_level.add(level, cw.c, cw.w, f);
        current = divide_characters(current, sym_exp(one_level));
    }
    current.require_effective("iterated_quotient_char");
    return current;
}

StabilityReport finite_generation_report(const SpaceCohomology& space, int n, int c0, int i) {
    space.validate();
    if (n < 2) throw InvalidInput("figen: n must be >= 2");
    if (c0 < 0 || i < 0) throw InvalidInput("figen: c0 and i must be >= 0");
    Rat line = Rat((2 * space.d - 1) * (n - 1)) / Rat(n);
    if (Rat(c0) >= line)
        throw InvalidInput("figen: requires c0 < (2d-1)(n-1)/n = " + render_fraction(line));
    StabilityReport rep;
    rep.mode = "figen";
    rep.n = n;
    rep.d = space.d;
    rep.c0 = c0;
    rep.i = i;
    rep.b = first_flavor_bound(n, space.d, c0);
    {
        std::ostringstream alg;
        alg << (c0 % 2 == 0 ? "Sym" : "Alt") << "(H^" << c0 << "(X)_1)"
            << " of dimension " << space.dim_at(c0);
        rep.acting_algebra = alg.str();
    }
    {
        std::ostringstream out;
        out << "sum_t H^(" << i << "+" << c0 << "t)(A^(" << c0 - 1 << "))_(1+t) is a finitely "
            << "generated " << rep.acting_algebra << "-module; the stabilization map is "
            << "surjective for t sufficiently large (no effective threshold is available)";
        rep.vanishing = out.str();
    }
    if (space.trivial_multiplication) {
        rep.window = generator_window(space, n, c0, i);
        rep.exact = true;
    } else {
        rep.notes.push_back("qualitative statement only (no trivial_multiplication)");
    }
    return rep;
}

FBCharacter divide_characters(const FBCharacter& A, const FBCharacter& O) {
    const int K = std::min(A.max_degree(), O.max_degree());
    if (!(O.slice(0) == FBCharacter::unit(K).slice(0)))
        throw InvalidInput("divide_characters: divisor must have the unit at degree 0");
    if (!(A.slice(0) == FBCharacter::unit(K).slice(0)))
        throw InvalidInput("divide_characters: dividend must have the unit at degree 0");
    FBCharacter G = FBCharacter::unit(K);
    for (int k = 1; k <= K; ++k) {
        for (const auto& [cw, f] : A.slice(k)) G.add(k, cw.c, cw.w, f);
        for (int j = 1; j <= k; ++j) {
            for (const auto& [cwo, fo] : O.slice(j))
                for (const auto& [cwg, fg] : G.slice(k - j))
                    G.add(k, cwo.c + cwg.c, cwo.w + cwg.w, fo * fg * Rat(-1));
        }
    }
    return G;
}

}  // namespace tcfa
