#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tcfa/stability.hpp"

#include <random>

using namespace tcfa;

TEST_CASE("support cone") {
    FBCharacter f(4);
    f.add(1, 0, 0, SymFunc::h(1));
    f.add(1, 1, 0, SymFunc::h(1));
    SupportCone cone = support_cone(f);
    CHECK(cone.b_lower == Rat(0));
    CHECK(cone.b_upper == Rat(1));

    // renormalized n=2 dual for d=2, K=4: slopes 0 .. 9/4
    LieDualChar dual = a2_character(2, 4);
    SupportCone hat = support_cone(dual.renormalized);
    CHECK(hat.b_lower == Rat(0));
    CHECK(hat.b_upper == Rat(9, 4));

    FBCharacter single(4);
    single.add(2, 3, 0, SymFunc::h(2));
    SupportCone sc = support_cone(single);
    CHECK(sc.b_lower == Rat(3, 2));
    CHECK(sc.b_upper == Rat(3, 2));

    FBCharacter empty(3);
    CHECK_THROWS_AS(support_cone(empty), InvalidInput);
    FBCharacter with_unit = FBCharacter::unit(3);
    CHECK_THROWS_AS(support_cone(with_unit), InvalidInput);
}

TEST_CASE("cone soundness: sym_exp stays inside the cone of its input") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> kd(1, 5), cd(0, 4), wd(0, 2), nd(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        FBCharacter f(5);
        int terms = nd(rng);
        for (int t = 0; t < terms; ++t) {
            int k = kd(rng);
            const auto& ps = partitions_of(k);
            std::uniform_int_distribution<size_t> pd(0, ps.size() - 1);
            f.add(k, cd(rng), wd(rng), SymFunc::s(ps[pd(rng)]));
        }
        if (f.is_zero()) continue;
        SupportCone cone = support_cone(f);
        FBCharacter e = sym_exp(f);
        for (const auto& [k, slice] : e.slices()) {
            if (k == 0) continue;
            for (const auto& [cw, fn] : slice) {
                (void)fn;
                CHECK(Rat(cw.c) >= cone.b_lower * Rat(k));
                CHECK(Rat(cw.c) <= cone.b_upper * Rat(k));
            }
        }
    }
}

TEST_CASE("iterate bounds: closed forms") {
    SpaceCohomology a2 = SpaceCohomology::affine_space(2);
    CHECK(iterate_indecomposables(a2, 2, 0, 3).b == Rat(1));  // min(3/2, 1)
    SpaceCohomology a1 = SpaceCohomology::affine_space(1);
    CHECK(iterate_indecomposables(a1, 2, 0, 3).b == Rat(1, 2));
    CHECK(iterate_indecomposables(a1, 3, 0, 3).b == Rat(2, 3));
}

TEST_CASE("iterate quotient for the line: FI-homology analog") {
    StabilityReport rep = iterate_indecomposables(SpaceCohomology::affine_space(1), 2, 0, 5);
    REQUIRE(rep.exact);
    REQUIRE(rep.certified);
    REQUIRE(rep.quotient);
    // deleting the single degree-1 class leaves sym_exp of the k >= 2 slices
    CHECK(rep.quotient->slice(1).empty());
    CHECK(rep.quotient->piece(2, 1, 1) == SymFunc::h(2));
    CHECK(rep.quotient->piece(3, 2, 2).dimension() == 2);
    // vanishing for k > 2c on all computed slices
    for (const auto& [k, slice] : rep.quotient->slices()) {
        if (k == 0) continue;
        for (const auto& [cw, f] : slice) {
            (void)f;
            CHECK(k <= 2 * cw.c);
        }
    }
}

TEST_CASE("iterate without trivial multiplication reports bounds only") {
    SpaceCohomology s;
    s.d = 2;
    s.classes = {{0, 0, 1}};
    s.trivial_multiplication = false;
    StabilityReport rep = iterate_indecomposables(s, 2, 0, 4);
    CHECK(!rep.exact);
    CHECK(!rep.quotient);
    CHECK(rep.b == Rat(1));
}

TEST_CASE("generator windows") {
    SpaceCohomology a2 = SpaceCohomology::affine_space(2);
    GeneratorWindow w1 = generator_window(a2, 2, 0, 5);
    CHECK(w1.lo == 1);
    CHECK(w1.hi == 5);
    GeneratorWindow w2 = generator_window(a2, 2, 1, 5);  // c0 = d-1
    CHECK(w2.hi == 8);
    SpaceCohomology a1 = SpaceCohomology::affine_space(1);
    GeneratorWindow w3 = generator_window(a1, 3, 0, 2);
    CHECK(w3.hi == 3);  // (2/3)^{-1} * 2
    CHECK_THROWS_AS(generator_window(a2, 2, 2, 5), InvalidInput);
}

TEST_CASE("toptriv split for the line, m=1") {
    StabilityReport rep = toptriv_split(SpaceCohomology::affine_space(1), 1, 3);
    REQUIRE(rep.exact);
    CHECK(rep.b == Rat(1, 2));
    REQUIRE(rep.ch_generators);
    CHECK(rep.ch_generators->piece(2, 1, 1) == SymFunc::h(2));
    CHECK(dimension(*rep.ch_generators, 3).at(CW{2, 2}) == 2);
    // operator algebra: free tca on one generator = trivial reps
    REQUIRE(rep.ch_operators);
    for (int k = 0; k <= 3; ++k) CHECK(rep.ch_operators->piece(k, 0, 0) == SymFunc::h(k == 0 ? 0 : k));
}

TEST_CASE("toptriv bounds with a cohomology gap") {
    SpaceCohomology s;
    s.d = 2;
    s.classes = {{0, 0, 1}, {1, 1, 1}};
    s.irreducible = true;
    s.top_triv = 1;
    StabilityReport rep = toptriv_split(s, 1, 2);
    CHECK(rep.b == Rat(1));  // min(3/2, s=1)
    CHECK(rep.s == 1);
    CHECK(!rep.exact);  // no trivial multiplication flag: report only
    REQUIRE(rep.ch_operators);
}

TEST_CASE("toptriv flag consistency") {
    SpaceCohomology s = SpaceCohomology::affine_space(1);
    s.top_triv = 1;
    CHECK_THROWS_AS(toptriv_split(s, 2, 3), InvalidInput);
    s.irreducible = false;
    CHECK_THROWS_AS(toptriv_split(s, 1, 3), InvalidInput);
}

TEST_CASE("split identity and iterated quotients agree, X in {A^1, A^2}") {
    for (int d = 1; d <= 2; ++d)
        for (int m = 1; m <= 2; ++m) {
            SpaceCohomology space = SpaceCohomology::affine_space(d);
            StabilityReport rep = toptriv_split(space, m, 5);
            REQUIRE(rep.exact);
            ConfCohomology cc = conf_cohomology(space, 2, 5);
            CHECK(induction_product(*rep.ch_operators, *rep.ch_generators) == cc.character);
            CHECK(rep.ch_generators->effective());
            FBCharacter iterated = iterated_quotient_char(space, m, 5);
            CHECK(iterated == *rep.ch_generators);
        }
}

TEST_CASE("iterated quotient absorbs everything at or below level m") {
    // X=A^2, m=2: slice k=2 vanishes entirely
    FBCharacter g = iterated_quotient_char(SpaceCohomology::affine_space(2), 2, 4);
    CHECK(g.slice(1).empty());
    CHECK(g.slice(2).empty());
    CHECK(!g.slice(3).empty());
}

TEST_CASE("character division is exact and inverts the product") {
    std::mt19937 rng(7177);
    std::uniform_int_distribution<int> kd(1, 4), cd(0, 3), wd(0, 2), nd(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        FBCharacter o(4), g(4);
        int terms = nd(rng);
        for (int t = 0; t < terms; ++t) {
            int k = kd(rng);
            const auto& ps = partitions_of(k);
            std::uniform_int_distribution<size_t> pd(0, ps.size() - 1);
            o.add(k, cd(rng), wd(rng), SymFunc::s(ps[pd(rng)]));
            k = kd(rng);
            const auto& ps2 = partitions_of(k);
            std::uniform_int_distribution<size_t> pd2(0, ps2.size() - 1);
            g.add(k, cd(rng), wd(rng), SymFunc::s(ps2[pd2(rng)]));
        }
        FBCharacter ou = FBCharacter::unit(4) + o;
        FBCharacter gu = FBCharacter::unit(4) + g;
        FBCharacter a = induction_product(ou, gu);
        CHECK(divide_characters(a, ou) == gu);
    }
}

TEST_CASE("finite generation report") {
    SpaceCohomology a2 = SpaceCohomology::affine_space(2);
    a2.classes.push_back({1, 1, 3});
    StabilityReport rep = finite_generation_report(a2, 2, 1, 5);
    CHECK(rep.acting_algebra.find("Alt") == 0);
    CHECK(rep.acting_algebra.find("dimension 3") != std::string::npos);
    CHECK(rep.window.has_value());

    StabilityReport even = finite_generation_report(a2, 2, 0, 5);
    CHECK(even.acting_algebra.find("Sym") == 0);

    // preconditions
    CHECK_THROWS_AS(finite_generation_report(a2, 2, 2, 5), InvalidInput);
    SpaceCohomology a1 = SpaceCohomology::affine_space(1);
    StabilityReport n4 = finite_generation_report(a1, 4, 0, 3);  // 0 < 3/4 holds
    CHECK(n4.b == Rat(3, 4));
}

TEST_CASE("support cone carries its certified claim") {
    FBCharacter f(3);
    f.add(2, 3, 0, SymFunc::h(2));
    SupportCone cone = support_cone(f);
    CHECK(cone.claim.find("3/2") != std::string::npos);
    CHECK(cone.points.size() == 1);
}
