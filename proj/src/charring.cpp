#include "tcfa/charring.hpp"

#include <cstdlib>

namespace tcfa {

int degree_cap() {
    static int cap = [] {
        const char* env = std::getenv("TCFA_MAX_DEGREE_CAP");
        if (env) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 9;
    }();
    return cap;
}

FBCharacter::FBCharacter(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw InvalidInput("max_degree must be >= 0");
}

FBCharacter FBCharacter::unit(int max_degree) {
    FBCharacter f(max_degree);
    f.add(0, 0, 0, SymFunc::one());
    return f;
}

void FBCharacter::add(int k, int c, int w, const SymFunc& f) {
    if (k < 0) throw InvalidInput("graded degree must be >= 0");
    if (k > max_degree_ || f.is_zero()) return;
    SymFunc pf = f.to_power();
    int deg = pf.homogeneous_degree();
    if (deg != k && !pf.is_zero())
        throw InvalidInput("slice at graded degree " + std::to_string(k) +
                           " must be homogeneous of that degree");
    auto& slice = slices_[k];
    auto it = slice.find({c, w});
    if (it == slice.end()) {
        slice[{c, w}] = pf;
    } else {
        it->second += pf;
        if (it->second.is_zero()) slice.erase(it);
    }
    if (slice.empty()) slices_.erase(k);
}

FBCharacter::Slice FBCharacter::slice(int k) const {
    auto it = slices_.find(k);
    return it == slices_.end() ? Slice{} : it->second;
}

SymFunc FBCharacter::piece(int k, int c, int w) const {
    auto it = slices_.find(k);
    if (it == slices_.end()) return SymFunc::zero();
    auto jt = it->second.find({c, w});
    return jt == it->second.end() ? SymFunc::zero() : jt->second;
}

FBCharacter FBCharacter::operator+(const FBCharacter& o) const {
    FBCharacter r(std::min(max_degree_, o.max_degree_));
    for (const auto& [k, slice] : slices_)
        for (const auto& [cw, f] : slice) r.add(k, cw.c, cw.w, f);
    for (const auto& [k, slice] : o.slices_)
        for (const auto& [cw, f] : slice) r.add(k, cw.c, cw.w, f);
    return r;
}

FBCharacter FBCharacter::operator-(const FBCharacter& o) const { return *this + o * Rat(-1); }

FBCharacter FBCharacter::operator*(const Rat& scalar) const {
    FBCharacter r(max_degree_);
    if (scalar == 0) return r;
    for (const auto& [k, slice] : slices_)
        for (const auto& [cw, f] : slice) r.add(k, cw.c, cw.w, f * scalar);
    return r;
}

bool FBCharacter::operator==(const FBCharacter& o) const { return slices_ == o.slices_; }

FBCharacter FBCharacter::truncated(int new_max) const {
    FBCharacter r(new_max);
    for (const auto& [k, slice] : slices_) {
        if (k > new_max) break;
        for (const auto& [cw, f] : slice) r.add(k, cw.c, cw.w, f);
    }
    return r;
}

FBCharacter FBCharacter::drop_degree_zero() const {
    FBCharacter r(max_degree_);
    for (const auto& [k, slice] : slices_) {
        if (k == 0) continue;
        for (const auto& [cw, f] : slice) r.add(k, cw.c, cw.w, f);
    }
    return r;
}

FBCharacter FBCharacter::shifted(int dc, int dw) const {
    FBCharacter r(max_degree_);
    for (const auto& [k, slice] : slices_)
        for (const auto& [cw, f] : slice) r.add(k, cw.c + dc, cw.w + dw, f);
    return r;
}

FBCharacter FBCharacter::shifted_per_degree(int dc, int dw) const {
    FBCharacter r(max_degree_);
    for (const auto& [k, slice] : slices_)
        for (const auto& [cw, f] : slice) r.add(k, cw.c + k * dc, cw.w + k * dw, f);
    return r;
}

bool FBCharacter::effective() const {
    for (const auto& [k, slice] : slices_) {
        (void)k;
        for (const auto& [cw, f] : slice) {
            (void)cw;
            if (!f.effective()) return false;
        }
    }
    return true;
}

void FBCharacter::require_effective(const std::string& context) const {
    if (!effective())
        throw std::logic_error(context + ": character has a negative or non-integer Schur coefficient");
}

FBCharacter induction_product(const FBCharacter& f, const FBCharacter& g) {
    FBCharacter r(std::min(f.max_degree(), g.max_degree()));
    for (const auto& [k1, s1] : f.slices()) {
        if (k1 > r.max_degree()) break;
        for (const auto& [k2, s2] : g.slices()) {
            if (k1 + k2 > r.max_degree()) break;
            for (const auto& [cw1, f1] : s1)
                for (const auto& [cw2, f2] : s2)
                    r.add(k1 + k2, cw1.c + cw2.c, cw1.w + cw2.w, f1 * f2);
        }
    }
    return r;
}

FBCharacter super_adams(int r, const FBCharacter& f) {
    if (r < 1) throw InvalidInput("super_adams: r must be >= 1");
    FBCharacter out(f.max_degree());
    for (const auto& [k, slice] : f.slices()) {
        if (static_cast<long long>(k) * r > f.max_degree()) break;
        for (const auto& [cw, fn] : slice) {
            SymFunc g = fn.adams(r);
            if (((r - 1) * cw.c) % 2 != 0) g = g * Rat(-1);
            out.add(k * r, cw.c * r, cw.w * r, g);
        }
    }
    return out;
}

FBCharacter sym_exp(const FBCharacter& f) {
    if (!f.slice(0).empty())
        throw InvalidInput("sym_exp: input must be supported in graded degrees >= 1");
    const int K = f.max_degree();
    // log-side sum: sum_r super_adams(r, f) / r
    FBCharacter logsum(K);
    for (int r = 1; r <= K; ++r) logsum = logsum + super_adams(r, f) * (Rat(1) / Rat(r));
    // exp: unit + sum_j logsum^j / j!
    FBCharacter acc = FBCharacter::unit(K);
    FBCharacter power = FBCharacter::unit(K);
    Rat factorial = 1;
    for (int j = 1; j <= K; ++j) {
        power = induction_product(power, logsum);
        if (power.is_zero()) break;
        factorial *= j;
        acc = acc + power * (Rat(1) / factorial);
    }
    return acc;
}

FBCharacter sym_log(const FBCharacter& g) {
    const int K = g.max_degree();
    if (!(g.slice(0) == FBCharacter::unit(K).slice(0)))
        throw InvalidInput("sym_log: degree-0 slice must be exactly the unit");
    FBCharacter f(K);
    for (int k = 1; k <= K; ++k) {
        // sym_exp(f)|_k depends only on f's slices of degree < k plus f_k itself
        FBCharacter e = sym_exp(f.truncated(k)).truncated(k);
        for (const auto& [cw, fn] : g.slice(k)) f.add(k, cw.c, cw.w, fn);
        for (const auto& [cw, fn] : e.slice(k)) f.add(k, cw.c, cw.w, fn * Rat(-1));
    }
    return f;
}

FBCharacter::Slice tensor_power_character(const FBCharacter& v, int k) {
    if (k < 1) throw InvalidInput("tensor_power_character: k must be >= 1");
    for (const auto& [kk, slice] : v.slices()) {
        (void)slice;
        if (kk != 1) throw InvalidInput("tensor_power_character: input must be supported at graded degree 1");
    }
    FBCharacter vk = v.truncated(k);
    return sym_exp(vk).slice(k);
}

std::map<CW, long long> dimension(const FBCharacter& f, int k) {
    std::map<CW, long long> out;
    for (const auto& [cw, fn] : f.slice(k)) {
        Rat d = fn.dimension();
        if (!is_integer(d))
            throw std::logic_error("dimension: non-integer dimension encountered");
        out[cw] = to_long(d);
    }
    return out;
}

}  // namespace tcfa
