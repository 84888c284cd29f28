#pragma once

#include <complex>
#include <string>
#include <vector>

#include "eistrace/biseries.hpp"
#include "eistrace/cyclotomic.hpp"
#include "eistrace/divisor.hpp"
#include "eistrace/eisenstein.hpp"
#include "eistrace/partitions.hpp"

namespace eistrace {

// Re-grids a rational q-series onto q^{1/L} and maps it into the ring T.
template <class T>
QSeries<T> to_ring(const QSeries<Rational>& s, long L, long qt) {
  QSeries<Rational> r = s.with_denom(L).truncated(qt);
  return map_coeffs<T>(r, [](const Rational& v) { return ring_traits<T>::from_rational(v); });
}

// e^{cZ} as an outer series with constant q-rows c^j/j!.
template <class T>
BiSeries<T> exp_outer_constant(const Rational& c, const std::string& var, long hi, long L,
                               long qt) {
  BiSeries<T> out(var, 0, hi, L, qt);
  Rational p(1);
  for (long j = 0; j < hi; ++j) {
    if (j > 0) p = p * c / Rational(j);
    out.set_row(j, QSeries<T>::constant(ring_traits<T>::from_rational(p), qt, L));
  }
  return out;
}

// Theta from the triple product:
// (e^{Z/2} - e^{-Z/2}) prod_n (1 - e^Z q^n)(1 - e^{-Z} q^n) / (q;q)^2,
// complete through (Z^zorder, q^N) on the q^{1/L} grid.
template <class T>
BiSeries<T> theta_product(long zorder, long N, long L = 1) {
  using RT = ring_traits<T>;
  if (zorder < 1 || N < 1 || L < 1) throw SeriesDomainError("theta_product needs positive orders");
  long hi = zorder + 1, qt = N * L + 1;
  BiSeries<T> acc("Z", 0, hi, L, qt);
  for (long j = 1; j < hi; j += 2) {
    // 2 sinh(Z/2): odd rows 2 (1/2)^j / j!
    Rational c = Rational(2) / (rational_pow(Rational(2), j) * Rational(factorial(j)));
    acc.set_row(j, QSeries<T>::constant(RT::from_rational(c), qt, L));
  }
  for (long n = 1; n <= N; ++n) {
    // (1 - e^Z q^n)(1 - e^{-Z} q^n) = 1 - (e^Z + e^{-Z}) q^n + q^{2n}
    BiSeries<T> f("Z", 0, hi, L, qt);
    for (long j = 0; j < hi; j += 2) {
      QSeries<T> row(L, qt);
      if (j == 0) {
        row.set(0, RT::one());
        if (2 * n * L < qt) row.set(2 * n * L, RT::one());
      }
      Rational c = Rational(-2) / Rational(factorial(j));
      row.add_to(n * L, RT::from_rational(c));
      f.set_row(j, std::move(row));
    }
    acc = acc * f;
  }
  QSeries<T> eta = to_ring<T>(eta_pochhammer(N), L, qt);
  return rowwise(acc, invert((eta * eta).truncated(qt)));
}

// Theta from the sigma-function exponential: Z exp(-sum_k G_{2k} Z^{2k}/(2k)!).
template <class T>
BiSeries<T> theta_exponential(long zorder, long N, long L = 1) {
  if (zorder < 1 || N < 1 || L < 1)
    throw SeriesDomainError("theta_exponential needs positive orders");
  long qt = N * L + 1;
  BiSeries<T> arg("Z", 0, std::max(zorder, 1L), L, qt);
  long K = (zorder - 1) / 2;
  if (K >= 1) {
    EisensteinTable tab(2 * K, N);
    for (long k = 1; k <= K; ++k)
      arg.set_row(2 * k, to_ring<T>(scale(tab.G(2 * k),
                                          -Rational(1) / Rational(factorial(2 * k))),
                                    L, qt));
  }
  return bi_exp(arg).shifted_outer(1);
}

// The Weierstrass sigma expansion shares the holomorphic exponential form.
template <class T>
BiSeries<T> sigma_expansion(long zorder, long N, long L = 1) {
  return theta_exponential<T>(zorder, N, L);
}

// Coefficient of Z^{2k} in exp(-sum_j G_{2j} Z^{2j}/(2j)!) equals the
// k-th trace under phi_lambda, for every k <= K.
inline bool theorem1_trace_check(long K, long N) {
  if (K < 1 || N < 1) throw SeriesDomainError("trace check needs K >= 1, N >= 1");
  EisensteinTable tab(2 * K, N);
  BiSeries<Rational> arg("Z", 0, 2 * K + 1, 1, N + 1);
  for (long j = 1; j <= K; ++j)
    arg.set_row(2 * j, scale(tab.G(2 * j), -Rational(1) / Rational(factorial(2 * j))));
  BiSeries<Rational> e = bi_exp(arg);
  for (long k = 0; k <= K; ++k) {
    if (e.row(2 * k) != tab.trace(k, phi_lambda)) return false;
    if (2 * k + 1 < e.hi() && !e.row(2 * k + 1).is_zero()) return false;
  }
  return true;
}

namespace detail {

inline Integer int_pow(long n, long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
  return p;
}

}  // namespace detail

// Torsional Eisenstein coefficients: minus the k-th (u d/du) derivative of
// log Theta at u = e^{-2 pi i x}, as an exact q^{1/L}-series.  For x = a t + b
// (a = alpha, b = beta, zeta = e^{2 pi i b}):
//   a = 0:  1/2 [k=1] + (E_{k-1} v)|_{v = 1/(zeta-1)}
//           + sum_{m,n>=1} n^{k-1} (zeta^{-n} + (-1)^k zeta^n) q^{mn},
//           with E the operator v^r -> r(v^r + v^{r+1});
//   a > 0: -1/2 [k=1] + sum_{m>=1,n>=1} n^{k-1} zeta^{-n} q^{(m-a)n}
//           + (-1)^k sum_{m>=0,n>=1} n^{k-1} zeta^{n} q^{(m+a)n}.
template <class T>
QSeries<T> torsional_G(long k, const TorsionPoint& x, long N, long L) {
  using RT = ring_traits<T>;
  if (k < 1) throw SeriesDomainError("torsional index must be >= 1");
  if (x.is_origin()) throw DivisorError("torsional series is undefined at the origin");
  if (N < 1 || L < 1) throw SeriesDomainError("torsional series needs positive orders");
  if (L % x.alpha_denom() != 0)
    throw SeriesDomainError("q-grid does not refine the point's alpha");
  long qt = N * L + 1;
  long mb = x.beta_denom(), bn = x.beta_num();
  auto zeta_pow = [&](long e) { return RT::root_of_unity(bn * e, mb); };
  QSeries<T> out(L, qt);
  if (sgn(x.alpha) == 0) {
    T v0 = RT::inv(T(zeta_pow(1) - RT::one()));
    std::vector<Integer> c(static_cast<size_t>(k) + 1, Integer(0));
    c[1] = 1;
    for (long step = 1; step < k; ++step) {
      std::vector<Integer> d(static_cast<size_t>(k) + 1, Integer(0));
      for (long r = 1; r <= step; ++r) {
        if (c[static_cast<size_t>(r)] == 0) continue;
        d[static_cast<size_t>(r)] += r * c[static_cast<size_t>(r)];
        d[static_cast<size_t>(r + 1)] += r * c[static_cast<size_t>(r)];
      }
      c = std::move(d);
    }
    T cst = (k == 1) ? RT::from_rational(Rational(1, 2)) : RT::zero();
    T vp = RT::one();
    for (long r = 1; r <= k; ++r) {
      vp = T(vp * v0);
      if (c[static_cast<size_t>(r)] != 0)
        cst = T(cst + RT::scale(vp, Rational(c[static_cast<size_t>(r)])));
    }
    out.set(0, cst);
    for (long n = 1; n <= N; ++n) {
      T w = (k % 2 == 0) ? T(zeta_pow(-n) + zeta_pow(n)) : T(zeta_pow(-n) - zeta_pow(n));
      T term = RT::scale(w, Rational(detail::int_pow(n, k - 1)));
      if (RT::is_zero(term)) continue;
      for (long m = 1; m * n <= N; ++m) out.add_to(m * n * L, term);
    }
  } else {
    long aU = x.alpha_units(L);  // alpha * L, exact
    if (k == 1) out.set(0, RT::from_rational(Rational(-1, 2)));
    for (long m = 1; m <= N; ++m) {
      long base = m * L - aU;
      for (long n = 1; base * n < qt; ++n)
        out.add_to(base * n, RT::scale(zeta_pow(-n), Rational(detail::int_pow(n, k - 1))));
    }
    for (long m = 0; m * L + aU < qt; ++m) {
      long base = m * L + aU;
      for (long n = 1; base * n < qt; ++n) {
        T t = RT::scale(zeta_pow(n), Rational(detail::int_pow(n, k - 1)));
        if (k % 2 == 1) t = T(-t);
        out.add_to(base * n, t);
      }
    }
  }
  return out;
}

// Theta(z - x)/Theta(-x) expanded in Z on the q^{1/L} grid, with u-halves
// folded so only nonnegative grid exponents appear:
//   (e^{Z/2} - zeta q^a e^{-Z/2}) prod_n (1 - zeta^{-1} q^{n-a} e^Z)
//                                        (1 - zeta q^{n+a} e^{-Z})
// divided by its own Z = 0 slice; a lift shift multiplies by e^{lift_a Z}.
template <class T>
BiSeries<T> theta_shift_ratio(const TorsionPoint& x, long lift_a, long zorder, long N, long L) {
  using RT = ring_traits<T>;
  if (x.is_origin()) throw DivisorError("theta ratio is undefined at a lattice point");
  if (zorder < 1 || N < 1 || L < 1)
    throw SeriesDomainError("theta ratio needs positive orders");
  if (L % x.alpha_denom() != 0)
    throw SeriesDomainError("q-grid does not refine the point's alpha");
  long hi = zorder + 1, qt = N * L + 1;
  long aU = x.alpha_units(L);
  long mb = x.beta_denom(), bn = x.beta_num();
  auto zeta_pow = [&](long e) { return RT::root_of_unity(bn * e, mb); };
  BiSeries<T> num("Z", 0, hi, L, qt);
  for (long j = 0; j < hi; ++j) {
    QSeries<T> row(L, qt);
    Rational f = Rational(1) / Rational(factorial(j));
    row.add_to(0, RT::from_rational(f / rational_pow(Rational(2), j)));
    Rational g = -f / rational_pow(Rational(-2), j);
    if (aU < qt) row.add_to(aU, RT::scale(zeta_pow(1), g));
    num.set_row(j, std::move(row));
  }
  for (long n = 1; n <= N; ++n) {
    long up = n * L - aU;  // exponent of the e^Z factor, positive
    BiSeries<T> f("Z", 0, hi, L, qt);
    for (long j = 0; j < hi; ++j) {
      QSeries<T> row(L, qt);
      if (j == 0) row.set(0, RT::one());
      row.add_to(up, RT::scale(zeta_pow(-1), Rational(-1) / Rational(factorial(j))));
      f.set_row(j, std::move(row));
    }
    num = num * f;
    long dn = n * L + aU;  // exponent of the e^{-Z} factor
    if (dn >= qt) continue;
    BiSeries<T> g("Z", 0, hi, L, qt);
    for (long j = 0; j < hi; ++j) {
      QSeries<T> row(L, qt);
      if (j == 0) row.set(0, RT::one());
      Rational c = Rational(j % 2 == 0 ? -1 : 1) / Rational(factorial(j));
      row.add_to(dn, RT::scale(zeta_pow(1), c));
      g.set_row(j, std::move(row));
    }
    num = num * g;
  }
  BiSeries<T> ratio = rowwise(num, invert(num.row(0)));
  if (lift_a != 0) ratio = ratio * exp_outer_constant<T>(Rational(lift_a), "Z", hi, L, qt);
  return ratio;
}

// exp(-sum_{j>=1} Z^j/j! G_{j,x}), the Taylor side of the shift identity.
template <class T>
BiSeries<T> torsion_exp_side(const TorsionPoint& x, long zorder, long N, long L) {
  long qt = N * L + 1;
  BiSeries<T> arg("Z", 0, zorder + 1, L, qt);
  for (long j = 1; j <= zorder; ++j)
    arg.set_row(j, scale(torsional_G<T>(j, x, N, L), -Rational(1) / Rational(factorial(j))));
  return bi_exp(arg);
}

template <class T>
bool theta_shift_check(const TorsionPoint& x, long zorder, long N) {
  long L = x.alpha_denom();
  return bi_agree(theta_shift_ratio<T>(x, 0, zorder, N, L),
                  torsion_exp_side<T>(x, zorder, N, L));
}

// G_{k,D} = sum_x a_x G_{k,x} over the exact representatives; the origin
// contributes the classical series at even k and zero at odd k.  A tau-lifted
// representative x + a tau + b shifts only k = 1, by -a, since
// d/dz log Theta(z + tau) = d/dz log Theta(z) - 2 pi i and higher derivatives
// are periodic.
template <class T>
QSeries<T> divisor_G(long k, const Divisor& D, long N, long L) {
  if (D.terms().empty()) throw DivisorError("empty divisor");
  long qt = N * L + 1;
  QSeries<T> acc(L, qt);
  for (const DivisorTerm& t : D.terms()) {
    if (t.is_origin()) {
      if (k % 2 == 0) acc = acc + scale(to_ring<T>(eisenstein_G(k, N), L, qt), Rational(t.mult));
    } else {
      acc = acc + scale(torsional_G<T>(k, t.x, N, L), Rational(t.mult));
      if (k == 1 && t.lift_a != 0)
        acc.add_to(0, ring_traits<T>::from_rational(Rational(-t.mult * t.lift_a)));
    }
  }
  return acc;
}

// Tr_t(D) = sum_{lambda |- t} phi_J(lambda) prod_j G_{j,D}^{m_j}; Tr_0 = 1.
template <class T>
QSeries<T> divisor_trace(long t, const Divisor& D, long N, long L) {
  using RT = ring_traits<T>;
  long qt = N * L + 1;
  if (t == 0) return QSeries<T>::constant(RT::one(), qt, L);
  std::vector<QSeries<T>> g;
  g.reserve(static_cast<size_t>(t));
  for (long j = 1; j <= t; ++j) g.push_back(divisor_G<T>(j, D, N, L));
  QSeries<T> acc(L, qt);
  for (const Partition& lam : partitions_of(t)) {
    QSeries<T> prod = QSeries<T>::constant(RT::one(), qt, L);
    const auto& m = lam.mult();
    for (size_t j = 0; j < m.size(); ++j)
      if (m[j] != 0) prod = (prod * pow_series(g[j], m[j])).truncated(qt);
    acc = acc + scale(prod, phi_jacobi(lam));
  }
  return acc;
}

// F = Theta^{a_0} prod_{x != 0} (Theta(z-x)/Theta(-x))^{a_x}.
template <class T>
BiSeries<T> theorem3_lhs(const Divisor& D, long zorder, long N, long L) {
  if (D.terms().empty()) throw DivisorError("empty divisor");
  if (!D.zero_sum()) throw DivisorError("divisor lifts must sum to zero exactly");
  long qt = N * L + 1;
  long a0 = D.origin_mult();
  long zext = zorder + std::abs(a0) + 2;
  BiSeries<T> acc("Z", 0, zext + 1, L, qt);
  acc.set_row(0, QSeries<T>::constant(ring_traits<T>::one(), qt, L));
  if (a0 != 0) acc = bi_pow(theta_product<T>(zext, N, L), a0);
  for (const DivisorTerm& t : D.terms()) {
    if (t.is_origin()) continue;
    acc = acc * bi_pow(theta_shift_ratio<T>(t.x, t.lift_a, zext, N, L), t.mult);
  }
  return acc;
}

// sum_{t>=0} Tr_t(D) Z^{t + a_0}.
template <class T>
BiSeries<T> theorem3_rhs(const Divisor& D, long zorder, long N, long L) {
  long qt = N * L + 1;
  long a0 = D.origin_mult();
  BiSeries<T> out("Z", a0, zorder + 1, L, qt);
  for (long t = 0; a0 + t <= zorder; ++t) out.set_row(a0 + t, divisor_trace<T>(t, D, N, L));
  return out;
}

template <class T>
bool theorem3_reconstruct(const Divisor& D, long zorder, long N) {
  long L = D.qgrid();
  return bi_agree(theorem3_lhs<T>(D, zorder, N, L), theorem3_rhs<T>(D, zorder, N, L));
}

// Largest embedded coefficient gap over the jointly known part; for the
// complex-float fallback ring and for float cross-oracles in tests.
template <class T>
double max_embed_difference(const QSeries<T>& a, const QSeries<T>& b) {
  auto [x, y] = unify(a, b);
  long t = std::min(x.trunc(), y.trunc());
  double worst = 0.0;
  auto visit = [&](long e) {
    if (e >= t) return;
    double d = std::abs(ring_traits<T>::embed(x.coeff_units(e)) -
                        ring_traits<T>::embed(y.coeff_units(e)));
    worst = std::max(worst, d);
  };
  for (const auto& [e, v] : x.coeffs()) visit(e);
  for (const auto& [e, v] : y.coeffs()) visit(e);
  return worst;
}

template <class T>
double max_embed_difference(const BiSeries<T>& a, const BiSeries<T>& b) {
  long lo = std::min(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  double worst = 0.0;
  for (long t = lo; t < hi; ++t)
    worst = std::max(worst, max_embed_difference(a.row(t), b.row(t)));
  return worst;
}

}  // namespace eistrace
