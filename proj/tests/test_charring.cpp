#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tcfa/charring.hpp"

using namespace tcfa;

TEST_CASE("partition enumeration and canonical order") {
    const auto& p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition{3});
    CHECK(p3[1] == Partition{2, 1});
    CHECK(p3[2] == Partition{1, 1, 1});
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(9).size() == 30);

    auto bounded = partitions_of_bounded(6, 2);
    for (const auto& p : bounded)
        for (int part : p.parts) CHECK(part <= 2);
    CHECK(bounded.size() == 4);  // 2+2+2, 2+2+1+1, 2+1^4, 1^6

    CHECK(z_order(Partition{2, 1}) == 2);
    CHECK(z_order(Partition{1, 1, 1}) == 6);
    CHECK(z_order(Partition{3}) == 3);
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(Partition::parse("[3,1,1]") == Partition{3, 1, 1});
    CHECK(Partition{3, 1, 1}.to_string() == "[3,1,1]");
}

TEST_CASE("symmetric group character tables (Murnaghan-Nakayama)") {
    // classes of S_3 in canonical order: [3], [2,1], [1,1,1]
    CHECK(sym_character(Partition{3}, Partition{3}) == 1);
    CHECK(sym_character(Partition{3}, Partition{2, 1}) == 1);
    CHECK(sym_character(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(sym_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(sym_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(sym_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(sym_character(Partition{1, 1, 1}, Partition{3}) == 1);
    CHECK(sym_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(sym_character(Partition{1, 1, 1}, Partition{1, 1, 1}) == 1);

    // a few S_4 values against the standard table
    CHECK(sym_character(Partition{3, 1}, Partition{1, 1, 1, 1}) == 3);
    CHECK(sym_character(Partition{3, 1}, Partition{2, 2}) == -1);
    CHECK(sym_character(Partition{3, 1}, Partition{4}) == -1);
    CHECK(sym_character(Partition{2, 2}, Partition{2, 1, 1}) == 0);
    CHECK(sym_character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(sym_character(Partition{2, 1, 1}, Partition{2, 1, 1}) == -1);
    CHECK(sym_character(Partition{1, 1, 1, 1}, Partition{3, 1}) == 1);

    // column orthogonality at the identity: sum of squared dims = k!
    for (int k = 1; k <= 7; ++k) {
        long long sum = 0, fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        Partition ones(std::vector<int>(k, 1));
        for (const auto& lam : partitions_of(k)) {
            long long d = sym_character(lam, ones);
            CHECK(d > 0);
            sum += d * d;
        }
        CHECK(sum == fact);
    }
}

TEST_CASE("symfunc basics and basis conversions") {
    SymFunc h2 = SymFunc::h(2);
    SymFunc e2 = SymFunc::e(2);
    CHECK(h2.to_schur() == SymFunc::s(Partition{2}).to_schur());
    CHECK(e2.to_schur() == SymFunc::s(Partition{1, 1}).to_schur());

    // h_1 * h_1 = h_2 + e_2
    SymFunc h1 = SymFunc::h(1);
    CHECK(h1 * h1 == h2 + e2);

    // h_1 h_2 = s_3 + s_21
    SymFunc prod = h1 * h2;
    CHECK(prod == SymFunc::s(Partition{3}) + SymFunc::s(Partition{2, 1}));
    CHECK(prod.dimension() == 3);
    CHECK(SymFunc::h(3).dimension() == 1);
    CHECK(SymFunc::e(2).dimension() == 1);

    // p -> s -> p is the identity on every p_mu, k <= 6
    for (int k = 1; k <= 6; ++k)
        for (const auto& mu : partitions_of(k)) {
            SymFunc pm = SymFunc::p(mu);
            CHECK(pm.to_schur().to_power() == pm);
        }

    // s -> p -> s likewise
    for (int k = 1; k <= 6; ++k)
        for (const auto& lam : partitions_of(k)) {
            SymFunc sl = SymFunc::s(lam);
            SymFunc back = sl.to_schur();
            CHECK(back.coeff(lam) == 1);
            CHECK(back.coeffs().size() == 1);
        }

    CHECK(SymFunc::s(Partition{2, 1}).effective());
    CHECK(!(SymFunc::s(Partition{2}) * Rat(-1)).effective());
    CHECK(sign_twist(SymFunc::h(3)) == SymFunc::e(3));

    // char_value reads traces back off the Frobenius expansion
    SymFunc reg = h1 * h1 * h1;  // regular rep of S_3
    CHECK(reg.char_value(Partition{1, 1, 1}) == 6);
    CHECK(reg.char_value(Partition{2, 1}) == 0);
    CHECK(reg.char_value(Partition{3}) == 0);
}

TEST_CASE("induction_product on characters") {
    FBCharacter f(4), g(4);
    f.add(1, 0, 0, SymFunc::h(1));
    g.add(1, 0, 0, SymFunc::h(1));
    FBCharacter prod = induction_product(f, g);
    CHECK(prod.piece(2, 0, 0) == SymFunc::h(2) + SymFunc::e(2));

    // zero annihilates
    FBCharacter empty(4);
    CHECK(induction_product(f, empty).is_zero());

    // degrees add componentwise
    FBCharacter a(6), b(6);
    a.add(2, 1, 1, SymFunc::h(2));
    b.add(1, 2, 1, SymFunc::h(1));
    CHECK(induction_product(a, b).piece(3, 3, 2) == SymFunc::h(2) * SymFunc::h(1));

    // commutative, associative, unit neutral
    FBCharacter u = FBCharacter::unit(6);
    CHECK(induction_product(a, b) == induction_product(b, a));
    CHECK(induction_product(u, a) == a);
    FBCharacter c(6);
    c.add(1, 1, 0, SymFunc::h(1));
    CHECK(induction_product(induction_product(a, b), c) ==
          induction_product(a, induction_product(b, c)));
}

TEST_CASE("super_adams sign rule") {
    FBCharacter f(4);
    f.add(1, 1, 0, SymFunc::h(1));
    CHECK(super_adams(1, f) == f);
    // odd c, r=2: sign -1
    FBCharacter a2 = super_adams(2, f);
    CHECK(a2.piece(2, 2, 0) == SymFunc::p(2) * Rat(-1));
    // even c: no sign
    FBCharacter g(4);
    g.add(1, 2, 1, SymFunc::h(1));
    CHECK(super_adams(2, g).piece(2, 4, 2) == SymFunc::p(2));
}

TEST_CASE("sym_exp: free tca on one even class") {
    FBCharacter f(6);
    f.add(1, 0, 0, SymFunc::h(1));
    FBCharacter e = sym_exp(f);
    CHECK(e.piece(0, 0, 0) == SymFunc::one());
    for (int k = 1; k <= 6; ++k) {
        CHECK(e.slice(k).size() == 1);
        CHECK(e.piece(k, 0, 0) == SymFunc::h(k));
    }
}

TEST_CASE("sym_exp: one odd class gives the exterior algebra") {
    FBCharacter f(6);
    f.add(1, 1, 0, SymFunc::h(1));
    FBCharacter e = sym_exp(f);
    for (int k = 1; k <= 6; ++k) {
        CHECK(e.slice(k).size() == 1);
        CHECK(e.piece(k, k, 0) == SymFunc::e(k));
    }
    // the degree-3 slice is e_3 at c=3, independently derived by expanding
    // exp(p_1 t - p_2 t^2/2 + p_3 t^3/3 - ...) through order 3:
    SymFunc expected = SymFunc::p(Partition{1, 1, 1}) * Rat(1, 6) -
                       SymFunc::p(Partition{2, 1}) * Rat(1, 2) +
                       SymFunc::p(Partition{3}) * Rat(1, 3);
    CHECK(e.piece(3, 3, 0) == expected);
}

TEST_CASE("sym_exp rejects degree-0 input and empty gives unit") {
    FBCharacter bad(3);
    bad.add(0, 0, 0, SymFunc::one());
    CHECK_THROWS_AS(sym_exp(bad), InvalidInput);
    FBCharacter empty(3);
    CHECK(sym_exp(empty) == FBCharacter::unit(3));
}

TEST_CASE("sym_log examples") {
    // round trip through a single even generator at (k,c,w) = (2,2,1)
    FBCharacter f(6);
    f.add(2, 2, 1, SymFunc::h(2));
    CHECK(sym_log(sym_exp(f)) == f);

    // g = 1 + h_1 at (1, c=2, w=1): degree-2 slice of log is -h_2 at (4,2)
    FBCharacter g(4);
    g.add(0, 0, 0, SymFunc::one());
    g.add(1, 2, 1, SymFunc::h(1));
    FBCharacter lg = sym_log(g);
    CHECK(lg.piece(2, 4, 2) == SymFunc::h(2) * Rat(-1));

    // g = 1 + sum_k h_1^k at (c,w) = (k,k): degree-2 slice of log has dim 1
    FBCharacter bar(5);
    bar.add(0, 0, 0, SymFunc::one());
    SymFunc pw = SymFunc::one();
    for (int k = 1; k <= 5; ++k) {
        pw = pw * SymFunc::h(1);
        bar.add(k, k, k, pw);
    }
    FBCharacter lie = sym_log(bar);
    CHECK(lie.piece(2, 2, 2).dimension() == 1);
    CHECK(lie.piece(2, 2, 2) == SymFunc::h(2));
    CHECK(lie.slice(2).size() == 1);
    // degree-3 slice: dimension (k-1)! = 2
    CHECK(lie.piece(3, 3, 3).dimension() == 2);

    // rejects a missing unit slice
    FBCharacter nounit(3);
    nounit.add(1, 0, 0, SymFunc::h(1));
    CHECK_THROWS_AS(sym_log(nounit), InvalidInput);
}

TEST_CASE("tensor powers") {
    // one even class: trivial representations
    FBCharacter v(5);
    v.add(1, 0, 0, SymFunc::h(1));
    for (int k = 1; k <= 5; ++k) {
        auto slice = tensor_power_character(v, k);
        REQUIRE(slice.size() == 1);
        CHECK(slice.begin()->second == SymFunc::h(k));
    }

    // dim V = 2, even: V tensor V = 3 s_2 + s_11 (trace of the swap is 2)
    FBCharacter v2(4);
    v2.add(1, 0, 0, SymFunc::h(1) * Rat(2));
    auto t2 = tensor_power_character(v2, 2);
    REQUIRE(t2.size() == 1);
    CHECK(t2.begin()->second == SymFunc::h(2) * Rat(3) + SymFunc::e(2));

    // dim V = 1, odd (c=1): Koszul sign makes the swap act by -1
    FBCharacter vo(4);
    vo.add(1, 1, 0, SymFunc::h(1));
    auto to2 = tensor_power_character(vo, 2);
    REQUIRE(to2.size() == 1);
    CHECK(to2.begin()->first == CW{2, 0});
    CHECK(to2.begin()->second == SymFunc::e(2));
}

TEST_CASE("dimension extraction and Kuenneth additivity") {
    FBCharacter f(4);
    f.add(3, 0, 0, SymFunc::h(3));
    f.add(2, 1, 0, SymFunc::e(2));
    auto d3 = dimension(f, 3);
    CHECK(d3.at(CW{0, 0}) == 1);
    auto d2 = dimension(f, 2);
    CHECK(d2.at(CW{1, 0}) == 1);

    FBCharacter a(4), b(4);
    a.add(1, 0, 0, SymFunc::h(1));
    b.add(2, 0, 0, SymFunc::h(2));
    auto dp = dimension(induction_product(a, b), 3);
    CHECK(dp.at(CW{0, 0}) == 3);  // Ind_{S_1 x S_2}^{S_3} triv: coset count
}

// -- randomized properties ---------------------------------------------------

namespace {

FBCharacter random_effective(std::mt19937& rng, int K, int max_classes) {
    std::uniform_int_distribution<int> kd(1, K), cd(0, 3), wd(0, 2), coef(1, 2), nd(1, max_classes);
    FBCharacter f(K);
    int n = nd(rng);
    for (int i = 0; i < n; ++i) {
        int k = kd(rng);
        const auto& ps = partitions_of(k);
        std::uniform_int_distribution<size_t> pd(0, ps.size() - 1);
        f.add(k, cd(rng), wd(rng), SymFunc::s(ps[pd(rng)]) * Rat(coef(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("plethysm associativity: psi_r psi_s = psi_rs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 30; ++trial) {
        FBCharacter f = random_effective(rng, 4, 3);
        FBCharacter big(16);
        for (const auto& [k, slice] : f.slices())
            for (const auto& [cw, fn] : slice) big.add(k, cw.c, cw.w, fn);
        for (int r = 2; r <= 4; ++r)
            for (int s = 2; s <= 4; ++s)
                CHECK(super_adams(r, super_adams(s, big)) == super_adams(r * s, big));
    }
}

TEST_CASE("sym_exp and sym_log are mutually inverse") {
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 50; ++trial) {
        FBCharacter f = random_effective(rng, 5, 4);
        FBCharacter g = sym_exp(f);
        CHECK(sym_log(g) == f);
        CHECK(sym_exp(sym_log(g)) == g);
    }
}

TEST_CASE("sym_exp preserves effectiveness") {
    std::mt19937 rng(5551212);
    for (int trial = 0; trial < 30; ++trial) {
        FBCharacter f = random_effective(rng, 6, 3);
        CHECK(sym_exp(f).effective());
    }
}

TEST_CASE("even per-degree regrading commutes with sym_exp") {
    // slice-k offsets proportional to k pass through products and, when the
    // cohomological offset is even (no parity flips in the Koszul signs),
    // through Adams operations and the plethystic exponential
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        FBCharacter f = random_effective(rng, 4, 3);
        CHECK(sym_exp(f.shifted_per_degree(2, 1)) == sym_exp(f).shifted_per_degree(2, 1));
        CHECK(sym_exp(f.shifted_per_degree(-2, 1)) == sym_exp(f).shifted_per_degree(-2, 1));
    }
}

TEST_CASE("dimensions of induction products obey the binomial convolution") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 15; ++trial) {
        FBCharacter f = random_effective(rng, 3, 2);
        FBCharacter g = random_effective(rng, 3, 2);
        FBCharacter prod = induction_product(f, g);
        for (int k = 0; k <= 3; ++k) {
            std::map<CW, long long> expected;
            for (int k1 = 0; k1 <= k; ++k1) {
                long long binom = 1;
                for (int i = 0; i < k1; ++i) binom = binom * (k - i) / (i + 1);
                for (const auto& [cw1, d1] : dimension(f, k1))
                    for (const auto& [cw2, d2] : dimension(g, k - k1))
                        expected[CW{cw1.c + cw2.c, cw1.w + cw2.w}] += binom * d1 * d2;
            }
            std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
            CHECK(dimension(prod, k) == expected);
        }
    }
}
