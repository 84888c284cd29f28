#include <doctest.h>

#include <random>

#include "eistrace/biseries.hpp"

using eistrace::BiSeries;
using eistrace::QSeries;
using eistrace::Rational;
using QR = QSeries<eistrace::Rational>;
using BR = BiSeries<eistrace::Rational>;

namespace {

QR random_row(std::mt19937& rng, long qtrunc) {
  QR s(1, qtrunc);
  for (long e = 0; e < qtrunc; ++e) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    if (num != 0) s.set(e, Rational(num) / Rational(den));
  }
  return s;
}

BR random_bi(std::mt19937& rng, long lo, long hi, long qtrunc) {
  BR b("Z", lo, hi, 1, qtrunc);
  for (long t = lo; t < hi; ++t) b.set_row(t, random_row(rng, qtrunc));
  return b;
}

}  // namespace

TEST_CASE("row access and bounds") {
  BR b("Z", 2, 5, 1, 6);
  CHECK(b.row(0).is_zero());   // below lo: known zero
  CHECK(b.row(-3).is_zero());
  CHECK_THROWS_AS(b.row(5), eistrace::TruncationError);
  CHECK_THROWS_AS(b.set_row(1, QR(1, 6)), eistrace::TruncationError);
  CHECK_THROWS_AS(b.set_row(5, QR(1, 6)), eistrace::TruncationError);

  // Rows are re-gridded and truncated to fit; too little q-data is an error.
  b.set_row(2, QR::constant(Rational(7), 9));
  CHECK(b.row(2).trunc() == 6);
  CHECK(b.row(2).coeff_units(0) == Rational(7));
  CHECK_THROWS_AS(b.set_row(3, QR(1, 4)), eistrace::SeriesDomainError);
  CHECK_THROWS_AS(b.set_row(3, QR(2, 12)), eistrace::SeriesDomainError);  // grid 1/2 not coarsenable

  CHECK(b.order() == 2);
  b.set_row(2, QR(1, 6));
  CHECK(b.order() == 5);
  CHECK(b.is_zero());
}

TEST_CASE("outer product expands a square") {
  // (1 + (1-q) Z)^2 = 1 + 2(1-q) Z + (1-q)^2 Z^2
  BR a("Z", 0, 3, 1, 5);
  QR one_minus_q = QR::constant(Rational(1), 5);
  one_minus_q.set(1, Rational(-1));
  a.set_row(0, QR::constant(Rational(1), 5));
  a.set_row(1, one_minus_q);
  BR sq = a * a;
  CHECK(sq.lo() == 0);
  CHECK(sq.hi() == 3);
  CHECK(sq.row(0) == QR::constant(Rational(1), 5));
  CHECK(sq.row(1) == eistrace::scale(one_minus_q, Rational(2)));
  CHECK(sq.row(2) == one_minus_q * one_minus_q);
}

TEST_CASE("outer product truncation bookkeeping") {
  // a known on [1,3) with order 1, b known on [0,2) with order 0:
  // the unknown tail of a enters at 3+0, of b at 2+1, so hi = 3.
  BR a("Z", 1, 3, 1, 4);
  a.set_row(1, QR::constant(Rational(1), 4));
  BR b("Z", 0, 2, 1, 4);
  b.set_row(0, QR::constant(Rational(1), 4));
  BR p = a * b;
  CHECK(p.lo() == 1);
  CHECK(p.hi() == 3);

  // A zero factor yields a zero product over the bookkept range.
  BR z("Z", 0, 2, 1, 4);
  CHECK((z * b).is_zero());
}

TEST_CASE("inverse with an outer pole") {
  // a = Z^{-1} (1 + q) + 1; inverse starts at Z^{+1}.
  BR a("Z", -1, 2, 1, 6);
  QR lead = QR::constant(Rational(1), 6);
  lead.set(1, Rational(1));
  a.set_row(-1, lead);
  a.set_row(0, QR::constant(Rational(1), 6));
  BR inv = eistrace::bi_invert(a);
  CHECK(inv.lo() == 1);
  CHECK(inv.hi() == 4);
  BR prod = a * inv;
  BR one("Z", 0, 3, 1, 6);  // 1 + 0 Z + 0 Z^2: checks the product rows vanish
  one.set_row(0, QR::constant(Rational(1), 6));
  CHECK(eistrace::bi_agree(prod, one));

  BR bad("Z", 0, 2, 1, 6);
  bad.set_row(0, QR::monomial(Rational(1), 1, 1, 6));  // leading row has q-order 1
  CHECK_THROWS_AS(eistrace::bi_invert(bad), eistrace::SeriesDomainError);
  CHECK_THROWS_AS(eistrace::bi_invert(BR("Z", 0, 2, 1, 6)), eistrace::SeriesDomainError);
}

TEST_CASE("exp and log invert each other") {
  std::mt19937 rng(0xB15E);
  for (int trial = 0; trial < 6; ++trial) {
    BR arg("Z", 0, 6, 1, 5);
    for (long t = 1; t < 6; ++t) arg.set_row(t, random_row(rng, 5));
    BR e = eistrace::bi_exp(arg);
    CHECK(e.row(0) == QR::constant(Rational(1), 5));
    CHECK(eistrace::bi_agree(eistrace::bi_log(e), arg));

    // exp turns addition into multiplication.
    BR arg2("Z", 0, 6, 1, 5);
    for (long t = 1; t < 6; ++t) arg2.set_row(t, random_row(rng, 5));
    CHECK(eistrace::bi_agree(eistrace::bi_exp(arg + arg2),
                             eistrace::bi_exp(arg) * eistrace::bi_exp(arg2)));
  }

  BR bad("Z", 0, 3, 1, 4);
  bad.set_row(0, QR::constant(Rational(1), 4));
  CHECK_THROWS_AS(eistrace::bi_exp(bad), eistrace::SeriesDomainError);
  CHECK_THROWS_AS(eistrace::bi_log(BR("Z", 0, 3, 1, 4)), eistrace::SeriesDomainError);
}

TEST_CASE("powers") {
  std::mt19937 rng(0xF00D);
  BR u = random_bi(rng, 0, 4, 5);
  u.set_row(0, QR::constant(Rational(1), 5));  // make the leading row a unit
  CHECK(eistrace::bi_agree(eistrace::bi_pow(u, 3), u * u * u));
  CHECK(eistrace::bi_agree(eistrace::bi_pow(u, -1), eistrace::bi_invert(u)));
  BR p0 = eistrace::bi_pow(u, 0);
  CHECK(p0.row(0) == QR::constant(Rational(1), 5));
  CHECK(p0.order() == 0);

  BR neg = eistrace::bi_pow(u, -2) * u * u;
  BR one("Z", 0, 4, 1, 5);
  one.set_row(0, QR::constant(Rational(1), 5));
  CHECK(eistrace::bi_agree(neg, one));
}

TEST_CASE("outer substitution and relabeling") {
  std::mt19937 rng(0xABCD);
  BR a = random_bi(rng, 0, 4, 5);
  // Z -> -Y: row t picks up (-1)^t.
  BR s = eistrace::bi_substitute_outer(a, Rational(-1), 1, "Y");
  CHECK(s.var() == "Y");
  for (long t = 0; t < 4; ++t)
    CHECK(s.row(t) == eistrace::scale(a.row(t), (t % 2 == 0) ? Rational(1) : Rational(-1)));
  // Z -> 2 Y^2: row t moves to 2t, scaled 2^t.
  BR d = eistrace::bi_substitute_outer(a, Rational(2), 2, "Y");
  CHECK(d.hi() == 7);
  CHECK(d.row(2) == eistrace::scale(a.row(1), Rational(2)));
  CHECK(d.row(3).is_zero());

  BR sh = a.shifted_outer(3);
  CHECK(sh.lo() == 3);
  CHECK(sh.hi() == 7);
  CHECK(sh.row(5) == a.row(2));
  CHECK(sh.row(1).is_zero());  // below the shifted range: known zero
}

TEST_CASE("rowwise q-series multiplication") {
  BR a("Z", 0, 2, 1, 8);
  a.set_row(0, QR::constant(Rational(1), 8));
  a.set_row(1, QR::monomial(Rational(3), 2, 1, 8));
  QR s = QR::constant(Rational(1), 6);
  s.set(1, Rational(5));
  BR out = eistrace::rowwise(a, s);
  CHECK(out.qtrunc() == 6);
  CHECK(out.row(0) == s);
  CHECK(out.row(1).coeff_units(2) == Rational(3));
  CHECK(out.row(1).coeff_units(3) == Rational(15));
}

TEST_CASE("difference reporting") {
  BR a("Z", 0, 3, 1, 5);
  a.set_row(1, QR::monomial(Rational(2), 3, 1, 5));
  BR b = a;
  CHECK(eistrace::bi_agree(a, b));
  CHECK(!eistrace::first_bi_difference(a, b).has_value());
  b.set_row(2, QR::monomial(Rational(1), 4, 1, 5));
  CHECK(!eistrace::bi_agree(a, b));
  auto d = eistrace::first_bi_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->first == 2);
  CHECK(d->second == 4);
}

TEST_CASE("row mapping") {
  std::mt19937 rng(0x1234);
  BR a = random_bi(rng, 0, 3, 4);
  auto doubled = eistrace::map_rows<Rational>(
      a, [](const QR& r) { return eistrace::scale(r, Rational(2)); });
  for (long t = 0; t < 3; ++t) CHECK(doubled.row(t) == eistrace::scale(a.row(t), Rational(2)));
}
