#pragma once

#include <complex>
#include <string>
#include <vector>

#include "eistrace/errors.hpp"
#include "eistrace/rational.hpp"
#include "eistrace/ring.hpp"

namespace eistrace {

// Largest conductor handled exactly; beyond this callers fall back to
// complex floats.
inline constexpr long kMaxConductor = 12;

long euler_phi(long m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic of
// degree phi(m).  Computed once per conductor by exact division of x^m - 1.
const std::vector<Rational>& cyclotomic_poly(long m);

// Element of Q(zeta_m) stored as a residue mod Phi_m: coords c[0..phi(m)-1]
// represent sum c[j] * zeta_m^j.  Conductors 1 and 2 are plain rationals.
class Cyclo {
 public:
  Cyclo() : m_(1), c_{Rational(0)} {}
  explicit Cyclo(const Rational& r) : m_(1), c_{r} {}
  Cyclo(long m, std::vector<Rational> coords);

  static Cyclo zeta(long m, long j = 1);

  long conductor() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;          // no component beyond the constant one
  Rational rational_part() const;    // requires is_rational()

  Cyclo promoted(long big) const;    // conductor must divide big
  Cyclo inv() const;                 // extended gcd mod Phi_m
  std::complex<double> embed() const;
  std::string str() const;

 private:
  long m_;
  std::vector<Rational> c_;
};

Cyclo operator+(const Cyclo& a, const Cyclo& b);
Cyclo operator-(const Cyclo& a);
Cyclo operator-(const Cyclo& a, const Cyclo& b);
Cyclo operator*(const Cyclo& a, const Cyclo& b);
Cyclo operator*(const Cyclo& a, const Rational& r);
Cyclo operator*(const Rational& r, const Cyclo& a);
bool operator==(const Cyclo& a, const Cyclo& b);
inline bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

Cyclo zeta_power(long m, long j);

template <>
struct ring_traits<Cyclo> {
  static const char* name() { return "cyclotomic"; }
  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(Rational(1)); }
  static bool is_zero(const Cyclo& v) { return v.is_zero(); }
  static Cyclo from_rational(const Rational& r) { return Cyclo(r); }
  static Cyclo scale(const Cyclo& v, const Rational& r) { return v * r; }
  static Cyclo inv(const Cyclo& v) { return v.inv(); }
  static std::complex<double> embed(const Cyclo& v) { return v.embed(); }
  static Cyclo root_of_unity(long j, long m) { return zeta_power(m, j); }
  static std::string display(const Cyclo& v) { return v.str(); }
};

}  // namespace eistrace
