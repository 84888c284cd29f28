#pragma once

#include <complex>
#include <numbers>
#include <string>

#include "eistrace/errors.hpp"
#include "eistrace/rational.hpp"

namespace eistrace {

// Coefficient-ring glue for the series templates.  Arithmetic itself goes
// through the ordinary operators; the traits supply the pieces that are not
// expressible that way (exact inversion, rational scaling, the complex
// embedding, roots of unity).
template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static const char* name() { return "rational"; }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational scale(const Rational& a, const Rational& r) { return Rational(a * r); }
  static Rational inv(const Rational& a) {
    if (is_zero(a)) throw SeriesDomainError("rational inversion of zero");
    return Rational(1 / a);
  }
  static std::complex<double> embed(const Rational& a) { return {a.get_d(), 0.0}; }
  // e^{2pi i j/m}; representable over Q only when it is +-1.
  static Rational root_of_unity(long j, long m) {
    j = mod_floor(j, m);
    if (j == 0) return Rational(1);
    if (m % 2 == 0 && j == m / 2) return Rational(-1);
    throw SeriesDomainError("root of unity is not rational");
  }
  static std::string display(const Rational& a) { return a.get_str(); }
};

template <>
struct ring_traits<std::complex<double>> {
  using C = std::complex<double>;
  static const char* name() { return "complex"; }
  static C zero() { return {0.0, 0.0}; }
  static C one() { return {1.0, 0.0}; }
  static bool is_zero(const C& a) { return a == zero(); }
  static C from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
  static C scale(const C& a, const Rational& r) { return a * r.get_d(); }
  static C inv(const C& a) {
    if (is_zero(a)) throw SeriesDomainError("complex inversion of zero");
    return one() / a;
  }
  static C embed(const C& a) { return a; }
  static C root_of_unity(long j, long m) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
  }
  static std::string display(const C& a) {
    return "(" + std::to_string(a.real()) + "," + std::to_string(a.imag()) + ")";
  }
};

}  // namespace eistrace
