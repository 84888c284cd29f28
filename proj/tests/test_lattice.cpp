#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "eistrace/eisenstein.hpp"
#include "eistrace/lattice.hpp"

using eistrace::LatticeParams;
using eistrace::QSeries;
using eistrace::Rational;
using eistrace::TorsionPoint;
using CD = std::complex<double>;
using QR = QSeries<eistrace::Rational>;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("series evaluation basics") {
  CD tau(0.0, 1.0);
  QR one = QR::constant(Rational(1), 10);
  auto r = eistrace::eval_qseries(one, tau);
  CHECK(std::abs(r.value - CD(1.0, 0.0)) < 1e-15);
  CHECK(r.tail_bound > 0.0);
  CHECK(r.tail_bound < 1e-26);  // e^{-2 pi 10} / (1 - e^{-2 pi})

  // Partial geometric sum against the closed form.
  QR geo(1, 12);
  for (long e = 0; e < 12; ++e) geo.set(e, Rational(1));
  double q = std::exp(-2.0 * kPi);
  double closed = (1.0 - std::pow(q, 12.0)) / (1.0 - q);
  CHECK(std::abs(eistrace::eval_qseries(geo, tau).value - CD(closed, 0.0)) < 1e-15);

  // Fractional grid: the exponent e/L is honored.
  QR half = QR::monomial(Rational(1), 1, 2, 8);
  CHECK(std::abs(eistrace::eval_qseries(half, tau).value - CD(std::sqrt(q), 0.0)) < 1e-15);

  CHECK_THROWS_AS(eistrace::eval_qseries(one, CD(0.0, 0.3)), eistrace::SeriesDomainError);
}

TEST_CASE("evaluation is truncation stable") {
  CD tau(0.0, 1.0);
  // Euler product versus its own longer truncation.
  CD a = eistrace::eval_qseries(eistrace::eta_pochhammer(30), tau).value;
  CD b = eistrace::eval_qseries(eistrace::eta_pochhammer(60), tau).value;
  CHECK(std::abs(a - b) < 1e-12);

  CD g2a = eistrace::eval_qseries(eistrace::eisenstein_G(2, 30), tau).value;
  CD g2b = eistrace::eval_qseries(eistrace::eisenstein_G(2, 60), tau).value;
  CHECK(std::abs(g2a - g2b) < 1e-12);
}

TEST_CASE("half lattice enumeration for the square lattice") {
  CD tau(0.0, 1.0);
  auto pts = eistrace::lattice_half_points(tau, 5.0);
  // 80 nonzero Gaussian integers of norm <= 25, one per sign pair.
  CHECK(pts.size() == 40);
  CHECK(pts[0] == CD(1.0, 0.0));  // ties broken by angle
  CHECK(pts[1] == CD(0.0, 1.0));
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::norm(pts[i]) <= 25.0 + 1e-9);
    if (i) CHECK(std::norm(pts[i - 1]) <= std::norm(pts[i]) + 1e-12);
  }
}

TEST_CASE("ball-ordered power sums stabilize in the radius") {
  LatticeParams small{CD(0.0, 1.0), 60.0, 1.0};
  LatticeParams large{CD(0.0, 1.0), 120.0, 1.0};
  for (long j = 2; j <= 3; ++j) {
    CD a = eistrace::power_sum(j, small);
    CD b = eistrace::power_sum(j, large);
    CHECK(std::abs(a - b) < 1e-6);
  }

  // At s = 0 and weight 4 the ball sums converge absolutely to (2 pi i)^4/3! G_4.
  LatticeParams abs0{CD(0.0, 1.0), 300.0, 0.0};
  CD p2 = eistrace::power_sum(2, abs0);
  CD g4 = eistrace::eval_G(4, CD(0.0, 1.0), 40);
  CD expect = std::pow(CD(0.0, 2.0 * kPi), 4) / 6.0 * g4;
  CHECK(std::abs(p2 - expect) < 1e-6);
}

TEST_CASE("newton recursion matches the direct subset sums") {
  for (double s : {1.0, 0.5}) {
    LatticeParams p{CD(0.0, 1.0), 20.0, s};
    for (long k = 1; k <= 3; ++k) {
      CD a = eistrace::elementary_symmetric(k, p);
      CD b = eistrace::elementary_symmetric_brute(k, p);
      CHECK(std::abs(a - b) < 1e-10);
    }
    LatticeParams ptri{CD(0.5, std::sqrt(3.0) / 2.0), 15.0, s};
    CD a = eistrace::elementary_symmetric(2, ptri);
    CD b = eistrace::elementary_symmetric_brute(2, ptri);
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("richardson extrapolation") {
  // Exact for a quadratic sampled on a halving schedule.
  std::vector<double> sched{1.0, 0.5, 0.25};
  std::vector<CD> vals;
  for (double s : sched) vals.push_back(CD(3.0 + 2.0 * s + s * s, -s));
  CD lim = eistrace::richardson_limit(sched, vals);
  CHECK(std::abs(lim - CD(3.0, 0.0)) < 1e-12);

  CHECK_THROWS_AS(eistrace::richardson_limit({1.0, 0.4}, {CD(1.0), CD(2.0)}),
                  eistrace::SeriesDomainError);
  CHECK_THROWS_AS(eistrace::richardson_limit({1.0, 0.5}, {CD(1.0)}),
                  eistrace::SeriesDomainError);
  CHECK_THROWS_AS(eistrace::richardson_limit({}, {}), eistrace::SeriesDomainError);
}

TEST_CASE("eisenstein evaluations at the square point") {
  // Weights not divisible by 4 vanish on Z[i].
  CHECK(std::abs(eistrace::eval_G(6, CD(0.0, 1.0), 40)) < 1e-12);
  // The weight-2 completion cancels there: G_2(i) = -1/(4 pi).
  CHECK(std::abs(eistrace::eval_G2_star(CD(0.0, 1.0), 40)) < 1e-12);
  CD g2 = eistrace::eval_G(2, CD(0.0, 2.0), 40);
  CD g2s = eistrace::eval_G2_star(CD(0.0, 2.0), 40);
  CHECK(std::abs(g2s - g2 - CD(1.0 / (8.0 * kPi), 0.0)) < 1e-15);
}

TEST_CASE("lattice sums against the quasimodular prediction") {
  std::vector<double> sched{1.0, 0.5, 0.25, 0.125};
  for (long k : {1L, 2L}) {
    auto rep = eistrace::theorem1_numeric_check(k, CD(0.0, 2.0), sched, 300.0, 40);
    CHECK(rep.abs_error < 1e-3);
    CHECK(std::abs(rep.lattice_value - rep.prediction) == rep.abs_error);
  }
  // e_1 vanishes at tau = i: the square lattice has a 4-fold symmetry.
  auto v1 = eistrace::theorem1_numeric_check(1, CD(0.0, 1.0), sched, 300.0, 40);
  CHECK(std::abs(v1.lattice_value) < 1e-3);
  CHECK(std::abs(v1.prediction) < 1e-12);
}

TEST_CASE("inversion law spot checks") {
  CD tau(0.0, 2.0);
  auto r1 = eistrace::modularity_spot_check(2, TorsionPoint(Rational(0), Rational(1, 2)), tau);
  CHECK(r1.abs_error < 1e-6);
  CHECK(r1.xprime == TorsionPoint(Rational(1, 2), Rational(0)));
  auto r2 = eistrace::modularity_spot_check(1, TorsionPoint(Rational(1, 3), Rational(1, 3)), tau);
  CHECK(r2.abs_error < 1e-6);
  CHECK(r2.xprime == TorsionPoint(Rational(1, 3), Rational(2, 3)));
  auto r3 = eistrace::modularity_spot_check(3, TorsionPoint(Rational(0), Rational(1, 4)), tau);
  CHECK(r3.abs_error < 1e-6);
}
