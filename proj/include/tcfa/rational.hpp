#pragma once

#include <gmpxx.h>

#include <string>

namespace tcfa {

using Rat = mpq_class;
using Int = mpz_class;

// "p" or "p/q", canonical form (q > 0, gcd(p,q)=1).
inline std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) { return mpz_get_si(r.get_num().get_mpz_t()); }

}  // namespace tcfa
