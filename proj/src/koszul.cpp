#include "tcfa/koszul.hpp"

#include <sstream>

namespace tcfa {

static void check_truncation(int K) {
    if (K < 1) throw InvalidInput("max degree must be >= 1");
    if (K > degree_cap())
        throw InvalidInput("max degree " + std::to_string(K) + " exceeds the guardrail " +
                           std::to_string(degree_cap()) + " (set TCFA_MAX_DEGREE_CAP to raise it)");
}

namespace {

// Structural invariants of the dual character; these pin the sign and shift
// conventions of the whole pipeline.
void validate_raw(const FBCharacter& raw, int n, int d, int K) {
    std::ostringstream why;
    // degree-1 slice: one-dimensional at (2d-1, d)
    auto s1 = raw.slice(1);
    if (s1.size() != 1 || s1.begin()->first != CW{2 * d - 1, d} ||
        !(s1.begin()->second == SymFunc::h(1))) {
        throw CalibrationError("dual character: degree-1 slice is not h_1 at (2d-1, d)");
    }
    for (const auto& [k, slice] : raw.slices()) {
        if (k == 1) continue;
        if (k > 1 && k < n && !slice.empty())
            throw CalibrationError("dual character: slice " + std::to_string(k) +
                                   " must vanish for 1 < k < n");
        for (const auto& [cw, f] : slice) {
            if (cw.w != d * k)
                throw CalibrationError("dual character: weight must be d*k");
            // (2d-1)k <= c <= (2d(n-1)-1)k / (n-1)
            if (cw.c < (2 * d - 1) * k || cw.c * (n - 1) > (2 * d * (n - 1) - 1) * k)
                throw CalibrationError("dual character: slice " + std::to_string(k) +
                                       " supported outside the allowed degree window");
            if (!f.effective())
                throw CalibrationError("dual character: non-effective slice at k=" +
                                       std::to_string(k));
        }
    }
    (void)K;
}

LieDualChar finish(FBCharacter raw, int n, int d, int K) {
    validate_raw(raw, n, d, K);
    LieDualChar out;
    out.n = n;
    out.d = d;
    out.K = K;
    out.renormalized = raw.shifted(-2 * d + 1, -d);
    out.char_raw = std::move(raw);
    return out;
}

}  // namespace

LieDualChar a2_character(int d, int K) {
    if (d < 1) throw InvalidInput("dimension must be >= 1");
    check_truncation(K);
    FBCharacter bar = FBCharacter::unit(K);
    SymFunc power = SymFunc::one();
    for (int k = 1; k <= K; ++k) {
        power = power * SymFunc::h(1);  // regular representation
        bar.add(k, (2 * d - 1) * k, d * k, power);
    }
    return finish(sym_log(bar), 2, d, K);
}

LieDualChar an_character(int n, int d, int K) {
    if (n < 2) throw InvalidInput("truncation level n must be >= 2");
    if (d < 1) throw InvalidInput("dimension must be >= 1");
    check_truncation(K);
    FBComplex cx = FBComplex::bar_complex(n, d, K);
    HomologyResult h = homology(cx);
    FBCharacter bar = h.total_character(true);
    LieDualChar out = finish(sym_log(bar), n, d, K);
    if (n == 2) {
        LieDualChar closed = a2_character(d, K);
        if (!(out.char_raw == closed.char_raw))
            throw CalibrationError("n=2 dual character disagrees with the closed form");
    }
    return out;
}

FBCharacter operator_lie_char(int n, int d, int m, int K) {
    if (m < 1) throw InvalidInput("operator truncation m must be >= 1");
    if (n != 2 && m > 1)
        throw InvalidInput("operator characters with m > 1 are only available for n = 2");
    check_truncation(K);
    int depth = std::min(m, K);
    LieDualChar dual = (n == 2) ? a2_character(d, depth) : an_character(n, d, depth);
    FBCharacter out(K);
    for (const auto& [k, slice] : dual.renormalized.slices()) {
        if (k > m) break;
        for (const auto& [cw, f] : slice) out.add(k, cw.c, cw.w, f);
    }
    return out;
}

}  // namespace tcfa
