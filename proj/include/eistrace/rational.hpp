#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>

namespace eistrace {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Integer binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// b^e for integer e of either sign (b != 0 when e < 0).
inline Rational rational_pow(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  Rational base = b;
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    base = Rational(1) / base;
    e = -e;
  }
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Euclidean remainder in [0, b) for b > 0.
inline long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

// Reduces r mod 1 into [0, 1); *integer_part receives the subtracted integer.
inline Rational reduce_mod1(const Rational& r, long* integer_part = nullptr) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (integer_part) {
    if (!fl.fits_slong_p()) throw std::overflow_error("integer part too large");
    *integer_part = fl.get_si();
  }
  return r - Rational(fl);
}

}  // namespace eistrace
