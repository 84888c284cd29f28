#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eistrace/errors.hpp"
#include "eistrace/ring.hpp"

namespace eistrace {

// Truncated Laurent series in q^{1/L}.  Exponents are stored in units of
// 1/denom(); trunc() is exclusive in the same units.  Exponents may be
// negative but are always bounded below.  Coefficients at exponents >= trunc
// are unknown, not zero; coeff() refuses to report them.
template <class T>
class QSeries {
 public:
  using traits = ring_traits<T>;

  QSeries(long denom, long trunc) : denom_(denom), trunc_(trunc) {
    if (denom < 1) throw SeriesDomainError("series denominator must be positive");
  }

  static QSeries constant(const T& v, long trunc, long denom = 1) {
    QSeries s(denom, trunc);
    s.set(0, v);
    return s;
  }

  static QSeries monomial(const T& v, long expo, long denom, long trunc) {
    QSeries s(denom, trunc);
    s.set(expo, v);
    return s;
  }

  long denom() const { return denom_; }
  long trunc() const { return trunc_; }
  const std::map<long, T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // Lowest stored exponent; trunc() for the zero series.
  long order() const { return c_.empty() ? trunc_ : c_.begin()->first; }

  // Coefficient at exponent e (in 1/denom units).
  T coeff_units(long e) const {
    if (e >= trunc_) throw TruncationError("coefficient at or beyond truncation");
    auto it = c_.find(e);
    return it == c_.end() ? traits::zero() : it->second;
  }

  // Coefficient of q^{num/den}; zero when the exponent is off-grid.
  T coeff(long num, long den = 1) const {
    if ((num * denom_) % den != 0) {
      if (num * denom_ >= den * trunc_) throw TruncationError("coefficient at or beyond truncation");
      return traits::zero();
    }
    return coeff_units(num * denom_ / den);
  }

  QSeries& set(long e, T v) {
    require_below_trunc(e);
    if (traits::is_zero(v))
      c_.erase(e);
    else
      c_[e] = std::move(v);
    return *this;
  }

  QSeries& add_to(long e, const T& v) {
    require_below_trunc(e);
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (!traits::is_zero(v)) c_.emplace(e, v);
    } else {
      it->second = T(it->second + v);
      if (traits::is_zero(it->second)) c_.erase(it);
    }
    return *this;
  }

  // Rescales to a finer grid; L must be a multiple of denom().
  QSeries with_denom(long L) const {
    if (L % denom_ != 0) throw SeriesDomainError("denominator is not a multiple refinement");
    long f = L / denom_;
    if (f == 1) return *this;
    QSeries out(L, trunc_ * f);
    for (const auto& [e, v] : c_) out.c_.emplace(e * f, v);
    return out;
  }

  QSeries truncated(long t) const {
    if (t > trunc_) throw TruncationError("cannot extend truncation");
    QSeries out(denom_, t);
    for (const auto& [e, v] : c_) {
      if (e >= t) break;
      out.c_.emplace(e, v);
    }
    return out;
  }

  // Multiplies by q^{units/denom}.
  QSeries shifted(long units) const {
    QSeries out(denom_, trunc_ + units);
    for (const auto& [e, v] : c_) out.c_.emplace(e + units, v);
    return out;
  }

  bool operator==(const QSeries& rhs) const {
    long L = lcm_long(denom_, rhs.denom_);
    QSeries a = with_denom(L), b = rhs.with_denom(L);
    return a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }
  bool operator!=(const QSeries& rhs) const { return !(*this == rhs); }

 private:
  void require_below_trunc(long e) const {
    if (e >= trunc_) throw TruncationError("exponent at or beyond truncation");
  }

  long denom_;
  long trunc_;
  std::map<long, T> c_;
};

template <class T>
std::pair<QSeries<T>, QSeries<T>> unify(const QSeries<T>& a, const QSeries<T>& b) {
  long L = lcm_long(a.denom(), b.denom());
  return {a.with_denom(L), b.with_denom(L)};
}

template <class T>
QSeries<T> operator+(const QSeries<T>& lhs, const QSeries<T>& rhs) {
  auto [a, b] = unify(lhs, rhs);
  QSeries<T> out(a.denom(), std::min(a.trunc(), b.trunc()));
  for (const auto& [e, v] : a.coeffs())
    if (e < out.trunc()) out.add_to(e, v);
  for (const auto& [e, v] : b.coeffs())
    if (e < out.trunc()) out.add_to(e, v);
  return out;
}

template <class T>
QSeries<T> operator-(const QSeries<T>& a) {
  QSeries<T> out(a.denom(), a.trunc());
  for (const auto& [e, v] : a.coeffs()) out.set(e, T(-v));
  return out;
}

template <class T>
QSeries<T> operator-(const QSeries<T>& a, const QSeries<T>& b) {
  return a + (-b);
}

// Cauchy product.  With l = order of each factor, the product is valid up to
// min(trunc_a + l_b, trunc_b + l_a): the unknown tail of one factor enters
// only multiplied by the other factor's lowest term.
template <class T>
QSeries<T> operator*(const QSeries<T>& lhs, const QSeries<T>& rhs) {
  auto [a, b] = unify(lhs, rhs);
  long t = std::min(a.trunc() + b.order(), b.trunc() + a.order());
  QSeries<T> out(a.denom(), t);
  if (a.is_zero() || b.is_zero()) return out;
  long lo = a.order() + b.order();
  if (lo >= t) return out;
  std::vector<T> acc(static_cast<size_t>(t - lo), ring_traits<T>::zero());
  for (const auto& [ea, va] : a.coeffs()) {
    if (ea + b.order() >= t) break;
    for (const auto& [eb, vb] : b.coeffs()) {
      long e = ea + eb;
      if (e >= t) break;
      acc[static_cast<size_t>(e - lo)] = T(acc[static_cast<size_t>(e - lo)] + va * vb);
    }
  }
  for (long e = lo; e < t; ++e) out.set(e, std::move(acc[static_cast<size_t>(e - lo)]));
  return out;
}

template <class T>
QSeries<T> operator*(const QSeries<T>& a, const T& s) {
  QSeries<T> out(a.denom(), a.trunc());
  for (const auto& [e, v] : a.coeffs()) out.set(e, T(v * s));
  return out;
}

template <class T>
QSeries<T> operator*(const T& s, const QSeries<T>& a) {
  return a * s;
}

template <class T>
QSeries<T> scale(const QSeries<T>& a, const Rational& r) {
  QSeries<T> out(a.denom(), a.trunc());
  for (const auto& [e, v] : a.coeffs()) out.set(e, ring_traits<T>::scale(v, r));
  return out;
}

// Reciprocal.  Writing a = c q^l (1 + s), the result is c^{-1} q^{-l} / (1+s);
// the tail of a is damped by q^l twice, so the result is valid to trunc - 2l.
template <class T>
QSeries<T> invert(const QSeries<T>& a) {
  if (a.is_zero()) throw SeriesDomainError("inversion of the zero series");
  long l = a.order();
  long n_max = a.trunc() - l;  // number of known coefficients of 1 + s
  T cinv = ring_traits<T>::inv(a.coeff_units(l));
  std::vector<T> s(static_cast<size_t>(n_max), ring_traits<T>::zero());
  for (const auto& [e, v] : a.coeffs()) s[static_cast<size_t>(e - l)] = T(v * cinv);
  std::vector<T> u(static_cast<size_t>(n_max), ring_traits<T>::zero());
  u[0] = ring_traits<T>::one();
  for (long n = 1; n < n_max; ++n) {
    T acc = ring_traits<T>::zero();
    for (long k = 1; k <= n; ++k)
      if (!ring_traits<T>::is_zero(s[static_cast<size_t>(k)]))
        acc = T(acc + s[static_cast<size_t>(k)] * u[static_cast<size_t>(n - k)]);
    u[static_cast<size_t>(n)] = T(-acc);
  }
  QSeries<T> out(a.denom(), a.trunc() - 2 * l);
  for (long n = 0; n < n_max; ++n)
    if (-l + n < out.trunc()) out.set(-l + n, T(cinv * u[static_cast<size_t>(n)]));
  return out;
}

// exp of a series with vanishing constant term and no negative exponents.
// f' = a' f gives n f_n = sum_{k=1..n} k a_k f_{n-k}.
template <class T>
QSeries<T> exp_series(const QSeries<T>& a) {
  if (!a.is_zero() && a.order() < 1) throw SeriesDomainError("exp needs a positive-order argument");
  long n_max = a.trunc();
  if (n_max < 1) throw SeriesDomainError("exp needs a positive truncation");
  std::vector<T> f(static_cast<size_t>(n_max), ring_traits<T>::zero());
  f[0] = ring_traits<T>::one();
  for (long n = 1; n < n_max; ++n) {
    T acc = ring_traits<T>::zero();
    for (const auto& [k, ak] : a.coeffs()) {
      if (k > n) break;
      acc = T(acc + ring_traits<T>::scale(ak, Rational(k)) * f[static_cast<size_t>(n - k)]);
    }
    f[static_cast<size_t>(n)] = ring_traits<T>::scale(acc, Rational(1, n));
  }
  QSeries<T> out(a.denom(), n_max);
  for (long n = 0; n < n_max; ++n) out.set(n, std::move(f[static_cast<size_t>(n)]));
  return out;
}

// log of a series with constant term one and no negative exponents.
template <class T>
QSeries<T> log_series(const QSeries<T>& a) {
  if (a.order() != 0 || !ring_traits<T>::is_zero(T(a.coeff_units(0) - ring_traits<T>::one())))
    throw SeriesDomainError("log needs constant term one");
  long n_max = a.trunc();
  std::vector<T> f(static_cast<size_t>(n_max), ring_traits<T>::zero());
  for (const auto& [e, v] : a.coeffs()) f[static_cast<size_t>(e)] = v;
  std::vector<T> g(static_cast<size_t>(n_max), ring_traits<T>::zero());
  for (long n = 1; n < n_max; ++n) {
    T acc = ring_traits<T>::zero();
    for (long k = 1; k < n; ++k)
      if (!ring_traits<T>::is_zero(g[static_cast<size_t>(k)]) &&
          !ring_traits<T>::is_zero(f[static_cast<size_t>(n - k)]))
        acc = T(acc + ring_traits<T>::scale(g[static_cast<size_t>(k)], Rational(k)) *
                          f[static_cast<size_t>(n - k)]);
    g[static_cast<size_t>(n)] = T(f[static_cast<size_t>(n)] - ring_traits<T>::scale(acc, Rational(1, n)));
  }
  QSeries<T> out(a.denom(), n_max);
  for (long n = 1; n < n_max; ++n) out.set(n, std::move(g[static_cast<size_t>(n)]));
  return out;
}

template <class T>
QSeries<T> pow_series(const QSeries<T>& a, long k) {
  if (k < 0) return pow_series(invert(a), -k);
  QSeries<T> acc = QSeries<T>::constant(ring_traits<T>::one(), a.trunc(), a.denom());
  QSeries<T> base = a;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

// Equality of the jointly known part (up to min truncation on the lcm grid).
template <class T>
bool agree(const QSeries<T>& lhs, const QSeries<T>& rhs) {
  auto [a, b] = unify(lhs, rhs);
  long t = std::min(a.trunc(), b.trunc());
  for (const auto& [e, v] : a.coeffs())
    if (e < t && !ring_traits<T>::is_zero(T(v - b.coeff_units(e)))) return false;
  for (const auto& [e, v] : b.coeffs())
    if (e < t && !ring_traits<T>::is_zero(T(v - a.coeff_units(e)))) return false;
  return true;
}

// First exponent (in lcm units) where the known parts differ.
template <class T>
std::optional<long> first_difference(const QSeries<T>& lhs, const QSeries<T>& rhs) {
  auto [a, b] = unify(lhs, rhs);
  long t = std::min(a.trunc(), b.trunc());
  long lo = std::min(a.order(), b.order());
  for (long e = lo; e < t; ++e)
    if (!ring_traits<T>::is_zero(T(a.coeff_units(e) - b.coeff_units(e)))) return e;
  return std::nullopt;
}

template <class U, class T, class F>
QSeries<U> map_coeffs(const QSeries<T>& a, F f) {
  QSeries<U> out(a.denom(), a.trunc());
  for (const auto& [e, v] : a.coeffs()) out.set(e, f(v));
  return out;
}

// (q;q)_N = prod_{n=1}^{N} (1 - q^n), complete through q^N (trunc N+1).
inline QSeries<Rational> eta_pochhammer(long N) {
  if (N < 1) throw SeriesDomainError("eta_pochhammer needs N >= 1");
  QSeries<Rational> acc = QSeries<Rational>::constant(Rational(1), N + 1);
  for (long n = 1; n <= N; ++n) {
    QSeries<Rational> f = QSeries<Rational>::constant(Rational(1), N + 1);
    f.set(n, Rational(-1));
    acc = (acc * f).truncated(N + 1);
  }
  return acc;
}

}  // namespace eistrace
