#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trispec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int pow2(unsigned k) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

// Parses a decimal literal ("0.5", "13.2", "1e-9", "-3") into an exact rational.
Rat rat_from_decimal(const std::string& s);

// Decimal rendering with outward rounding, so a printed interval still
// brackets the original value.  `digits` is the number of fractional digits.
std::string decimal_floor(const Rat& v, int digits);
std::string decimal_ceil(const Rat& v, int digits);

inline double to_double(const Rat& v) { return v.get_d(); }

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

}  // namespace trispec
