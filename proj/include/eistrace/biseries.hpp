#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eistrace/qseries.hpp"

namespace eistrace {

// Series in an outer formal variable (Z or X) whose coefficients are
// QSeries rows sharing one q-grid and one q-truncation.  Outer exponents run
// over [lo, hi) and may start below zero (a single 1/X pole is enough here).
template <class T>
class BiSeries {
 public:
  BiSeries(std::string var, long lo, long hi, long qdenom, long qtrunc)
      : var_(std::move(var)),
        lo_(lo),
        hi_(hi),
        qdenom_(qdenom),
        qtrunc_(qtrunc),
        zero_(qdenom, qtrunc) {
    if (hi < lo) throw SeriesDomainError("empty outer exponent range");
    rows_.assign(static_cast<size_t>(hi - lo), QSeries<T>(qdenom, qtrunc));
  }

  const std::string& var() const { return var_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  long qdenom() const { return qdenom_; }
  long qtrunc() const { return qtrunc_; }

  // Row t: known-zero below lo, stored in [lo, hi), unknown at or above hi.
  const QSeries<T>& row(long t) const {
    if (t >= hi_) throw TruncationError("outer exponent at or beyond truncation");
    if (t < lo_) return zero_;
    return rows_[static_cast<size_t>(t - lo_)];
  }

  BiSeries& set_row(long t, QSeries<T> s) {
    if (t < lo_ || t >= hi_) throw TruncationError("outer exponent outside stored range");
    if (s.denom() != qdenom_) s = s.with_denom(lcm_long(s.denom(), qdenom_));
    if (s.denom() != qdenom_ || s.trunc() < qtrunc_)
      throw SeriesDomainError("row grid incompatible with bivariate series");
    if (s.trunc() > qtrunc_) s = s.truncated(qtrunc_);
    rows_[static_cast<size_t>(t - lo_)] = std::move(s);
    return *this;
  }

  // First outer index with a nonzero row; hi() when all rows vanish.
  long order() const {
    for (long t = lo_; t < hi_; ++t)
      if (!row(t).is_zero()) return t;
    return hi_;
  }

  bool is_zero() const { return order() == hi_; }

  // Relabels outer exponents by +d (multiplication by outer^d).
  BiSeries shifted_outer(long d) const {
    BiSeries out = *this;
    out.lo_ += d;
    out.hi_ += d;
    return out;
  }

 private:
  std::string var_;
  long lo_, hi_;
  long qdenom_, qtrunc_;
  QSeries<T> zero_;
  std::vector<QSeries<T>> rows_;
};

template <class T>
BiSeries<T> operator+(const BiSeries<T>& a, const BiSeries<T>& b) {
  long L = lcm_long(a.qdenom(), b.qdenom());
  long qt = std::min(a.qtrunc() * (L / a.qdenom()), b.qtrunc() * (L / b.qdenom()));
  long lo = std::min(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  BiSeries<T> out(a.var(), lo, hi, L, qt);
  for (long t = lo; t < hi; ++t)
    out.set_row(t, (a.row(t).with_denom(L) + b.row(t).with_denom(L)).truncated(qt));
  return out;
}

template <class T>
BiSeries<T> operator-(const BiSeries<T>& a) {
  BiSeries<T> out(a.var(), a.lo(), a.hi(), a.qdenom(), a.qtrunc());
  for (long t = a.lo(); t < a.hi(); ++t) out.set_row(t, -a.row(t));
  return out;
}

template <class T>
BiSeries<T> operator-(const BiSeries<T>& a, const BiSeries<T>& b) {
  return a + (-b);
}

// Outer Cauchy product; the unknown outer tail of one factor is shielded by
// the other factor's outer order, exactly as in the univariate rule.
template <class T>
BiSeries<T> operator*(const BiSeries<T>& a, const BiSeries<T>& b) {
  long L = lcm_long(a.qdenom(), b.qdenom());
  long qt = std::min(a.qtrunc() * (L / a.qdenom()), b.qtrunc() * (L / b.qdenom()));
  long oa = a.order(), ob = b.order();
  long lo = a.lo() + b.lo();
  long hi = std::min(a.hi() + ob, b.hi() + oa);
  if (hi < lo) hi = lo;
  BiSeries<T> out(a.var(), lo, hi, L, qt);
  if (oa == a.hi() || ob == b.hi()) return out;
  for (long t = lo; t < hi; ++t) {
    QSeries<T> acc(L, qt);
    long i_lo = std::max(a.lo(), t - (b.hi() - 1));
    long i_hi = std::min(a.hi() - 1, t - b.lo());
    for (long i = i_lo; i <= i_hi; ++i) {
      const QSeries<T>& ra = a.row(i);
      const QSeries<T>& rb = b.row(t - i);
      if (ra.is_zero() || rb.is_zero()) continue;
      QSeries<T> prod = ra * rb;
      acc = acc + prod.truncated(std::min(qt, prod.trunc()));
    }
    out.set_row(t, acc.truncated(qt));
  }
  return out;
}

// Scales every row by a fixed q-series (e.g. 1/(q;q)); the q-series must be
// known at least to the bivariate q-truncation after re-gridding.
template <class T>
BiSeries<T> rowwise(const BiSeries<T>& a, const QSeries<T>& s) {
  long L = lcm_long(a.qdenom(), s.denom());
  long qt = std::min(a.qtrunc() * (L / a.qdenom()), s.trunc() * (L / s.denom()));
  BiSeries<T> out(a.var(), a.lo(), a.hi(), L, qt);
  for (long t = a.lo(); t < a.hi(); ++t) out.set_row(t, (a.row(t) * s).truncated(qt));
  return out;
}

template <class T>
BiSeries<T> bi_scale(const BiSeries<T>& a, const Rational& r) {
  BiSeries<T> out(a.var(), a.lo(), a.hi(), a.qdenom(), a.qtrunc());
  for (long t = a.lo(); t < a.hi(); ++t) out.set_row(t, scale(a.row(t), r));
  return out;
}

// Reciprocal: factor out the lowest nonzero outer row (which must be a unit
// q-series of q-order 0), then sum_{k=0..n} B_k C_{n-k} = [n = 0].
template <class T>
BiSeries<T> bi_invert(const BiSeries<T>& a) {
  long v = a.order();
  if (v == a.hi()) throw SeriesDomainError("inversion of the zero bivariate series");
  if (a.row(v).order() != 0)
    throw SeriesDomainError("bi_invert needs a leading row of q-order zero");
  long n = a.hi() - v;  // known outer length of the unit part
  QSeries<T> c0inv = invert(a.row(v)).truncated(a.qtrunc());
  std::vector<QSeries<T>> c(static_cast<size_t>(n), QSeries<T>(a.qdenom(), a.qtrunc()));
  c[0] = c0inv;
  for (long m = 1; m < n; ++m) {
    QSeries<T> acc(a.qdenom(), a.qtrunc());
    for (long k = 1; k <= m; ++k) {
      const QSeries<T>& bk = a.row(v + k);
      if (bk.is_zero() || c[static_cast<size_t>(m - k)].is_zero()) continue;
      acc = acc + (bk * c[static_cast<size_t>(m - k)]).truncated(a.qtrunc());
    }
    c[static_cast<size_t>(m)] = (-(c0inv * acc)).truncated(a.qtrunc());
  }
  BiSeries<T> out(a.var(), -v, -v + n, a.qdenom(), a.qtrunc());
  for (long m = 0; m < n; ++m) out.set_row(-v + m, std::move(c[static_cast<size_t>(m)]));
  return out;
}

// exp in the outer variable; rows below outer exponent 1 must vanish.
template <class T>
BiSeries<T> bi_exp(const BiSeries<T>& a) {
  for (long t = a.lo(); t < std::min(a.hi(), 1L); ++t)
    if (!a.row(t).is_zero()) throw SeriesDomainError("bi_exp needs outer order >= 1");
  long n = a.hi();
  if (n < 1) throw SeriesDomainError("bi_exp needs positive outer truncation");
  std::vector<QSeries<T>> f(static_cast<size_t>(n), QSeries<T>(a.qdenom(), a.qtrunc()));
  f[0] = QSeries<T>::constant(ring_traits<T>::one(), a.qtrunc(), a.qdenom());
  for (long m = 1; m < n; ++m) {
    QSeries<T> acc(a.qdenom(), a.qtrunc());
    for (long k = std::max(a.lo(), 1L); k <= m && k < a.hi(); ++k) {
      const QSeries<T>& ak = a.row(k);
      if (ak.is_zero() || f[static_cast<size_t>(m - k)].is_zero()) continue;
      acc = acc + scale((ak * f[static_cast<size_t>(m - k)]).truncated(a.qtrunc()), Rational(k));
    }
    f[static_cast<size_t>(m)] = scale(acc, Rational(1, m));
  }
  BiSeries<T> out(a.var(), 0, n, a.qdenom(), a.qtrunc());
  for (long m = 0; m < n; ++m) out.set_row(m, std::move(f[static_cast<size_t>(m)]));
  return out;
}

// log in the outer variable; outer row 0 must be the constant one.
template <class T>
BiSeries<T> bi_log(const BiSeries<T>& a) {
  for (long t = a.lo(); t < std::min(a.hi(), 0L); ++t)
    if (!a.row(t).is_zero()) throw SeriesDomainError("bi_log needs outer order 0");
  QSeries<T> one = QSeries<T>::constant(ring_traits<T>::one(), a.qtrunc(), a.qdenom());
  if (a.hi() < 1 || a.lo() > 0 || a.row(0) != one)
    throw SeriesDomainError("bi_log needs outer row 0 equal to one");
  long n = a.hi();
  std::vector<QSeries<T>> g(static_cast<size_t>(n), QSeries<T>(a.qdenom(), a.qtrunc()));
  for (long m = 1; m < n; ++m) {
    QSeries<T> acc(a.qdenom(), a.qtrunc());
    for (long k = 1; k < m; ++k) {
      const QSeries<T>& fmk = a.row(m - k);
      if (g[static_cast<size_t>(k)].is_zero() || fmk.is_zero()) continue;
      acc = acc + scale((g[static_cast<size_t>(k)] * fmk).truncated(a.qtrunc()), Rational(k));
    }
    g[static_cast<size_t>(m)] = a.row(m) - scale(acc, Rational(1, m));
  }
  BiSeries<T> out(a.var(), 0, n, a.qdenom(), a.qtrunc());
  for (long m = 1; m < n; ++m) out.set_row(m, std::move(g[static_cast<size_t>(m)]));
  return out;
}

template <class T>
BiSeries<T> bi_pow(const BiSeries<T>& a, long k) {
  if (k < 0) return bi_pow(bi_invert(a), -k);
  BiSeries<T> acc(a.var(), 0, a.hi(), a.qdenom(), a.qtrunc());
  acc.set_row(0, QSeries<T>::constant(ring_traits<T>::one(), a.qtrunc(), a.qdenom()));
  BiSeries<T> base = a;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

// Substitutes outer -> c * (new outer)^m, m >= 1: row t moves to m*t, scaled c^t.
template <class T>
BiSeries<T> bi_substitute_outer(const BiSeries<T>& a, const Rational& c, long m,
                                const std::string& new_var) {
  if (m < 1) throw SeriesDomainError("outer substitution needs a positive exponent");
  if (a.lo() < 0) throw SeriesDomainError("outer substitution needs nonnegative exponents");
  BiSeries<T> out(new_var, a.lo() * m, (a.hi() - 1) * m + 1, a.qdenom(), a.qtrunc());
  for (long t = a.lo(); t < a.hi(); ++t) out.set_row(t * m, scale(a.row(t), rational_pow(c, t)));
  return out;
}

// Equality of the jointly known rectangle.
template <class T>
bool bi_agree(const BiSeries<T>& a, const BiSeries<T>& b) {
  long lo = std::min(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  for (long t = lo; t < hi; ++t)
    if (!agree(a.row(t), b.row(t))) return false;
  return true;
}

// First (outer exponent, q exponent in lcm units) where the sides differ.
template <class T>
std::optional<std::pair<long, long>> first_bi_difference(const BiSeries<T>& a,
                                                         const BiSeries<T>& b) {
  long lo = std::min(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  for (long t = lo; t < hi; ++t)
    if (auto e = first_difference(a.row(t), b.row(t))) return std::make_pair(t, *e);
  return std::nullopt;
}

template <class U, class T, class F>
BiSeries<U> map_rows(const BiSeries<T>& a, F f) {
  BiSeries<U> out(a.var(), a.lo(), a.hi(), a.qdenom(), a.qtrunc());
  for (long t = a.lo(); t < a.hi(); ++t) out.set_row(t, f(a.row(t)));
  return out;
}

}  // namespace eistrace
