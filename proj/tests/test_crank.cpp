#include <doctest.h>

#include <map>

#include "eistrace/crank.hpp"

using eistrace::CrankTable;
using eistrace::EisensteinTable;
using eistrace::Integer;
using eistrace::Partition;
using eistrace::QSeries;
using eistrace::Rational;
using QR = QSeries<eistrace::Rational>;

TEST_CASE("crank counts at small n") {
  CrankTable gen = CrankTable::from_genfun(8);
  CrankTable comb = CrankTable::from_partitions(8);

  // n = 4: one partition for each crank in {-4,-2,0,2,4}.
  for (long m : {-4L, -2L, 0L, 2L, 4L}) {
    CHECK(gen.count(m, 4) == Integer(1));
    CHECK(comb.count(m, 4) == Integer(1));
  }
  CHECK(gen.count(1, 4) == Integer(0));
  CHECK(gen.count(3, 4) == Integer(0));
  CHECK(gen.count(5, 4) == Integer(0));  // outside |m| <= n

  // The generating product assigns weights (1, -1, 1) at n = 1; the
  // statistic itself gives the single partition (1) crank -1.
  CHECK(gen.count(-1, 1) == Integer(1));
  CHECK(gen.count(0, 1) == Integer(-1));
  CHECK(gen.count(1, 1) == Integer(1));
  CHECK(comb.count(-1, 1) == Integer(1));
  CHECK(comb.count(0, 1) == Integer(0));
  CHECK(comb.count(1, 1) == Integer(0));

  // Everywhere else the two constructions agree.
  for (long n = 0; n <= 8; ++n) {
    if (n == 1) continue;
    for (long m = -n; m <= n; ++m) CHECK(gen.count(m, n) == comb.count(m, n));
  }

  CHECK(gen.symmetric());
  CHECK(!comb.symmetric());

  // Row sums recover p(n) in both constructions.
  auto p = eistrace::partition_counts(8);
  for (long n = 0; n <= 8; ++n) {
    Integer sg(0), sc(0);
    for (long m = -n; m <= n; ++m) {
      sg += gen.count(m, n);
      sc += comb.count(m, n);
    }
    CHECK(sg == p[static_cast<size_t>(n)]);
    CHECK(sc == p[static_cast<size_t>(n)]);
  }
}

TEST_CASE("second moment is twice n p(n)") {
  CrankTable gen = CrankTable::from_genfun(12);
  QR m2 = gen.moment_series(2);
  auto p = eistrace::partition_counts(12);
  for (long n = 0; n <= 12; ++n)
    CHECK(m2.coeff_units(n) == Rational(2 * n) * Rational(p[static_cast<size_t>(n)]));
}

TEST_CASE("all moment routes agree") {
  EisensteinTable tab(10, 12);
  for (long k = 1; k <= 3; ++k) {
    QR def = eistrace::crank_moment_definition(2 * k, 12);
    QR cor = eistrace::crank_moment_corollary(2 * k, tab);
    QR lam = eistrace::crank_moment_lambert(2 * k, tab);
    CHECK(eistrace::agree(def, cor));
    CHECK(eistrace::agree(cor, lam));
    CHECK(def.coeff_units(0) == Rational(0));  // the empty partition contributes 0^{2k}
  }
}

TEST_CASE("sixth moment against direct crank enumeration") {
  CrankTable gen = CrankTable::from_genfun(8);
  QR c6 = gen.moment_series(6);
  // n = 1 uses the product weights: (-1)^6 + 0^6 (-1) + 1^6 = 2.
  CHECK(c6.coeff_units(1) == Rational(2));
  for (long n = 2; n <= 8; ++n) {
    Integer direct(0);
    for (const auto& lam : eistrace::partitions_of(n)) {
      long c = eistrace::crank_statistic(lam);
      Integer p(1);
      for (int i = 0; i < 6; ++i) p *= c;
      direct += p;
    }
    CHECK(c6.coeff_units(n) == Rational(direct));
  }
}

TEST_CASE("moment generating identity in two variables") {
  CHECK(eistrace::theorem2_check(3, 7, 10));
}

TEST_CASE("lambert product identity") {
  CHECK(eistrace::lemma41_check(6, 8));
}

TEST_CASE("sine power series identity") {
  CHECK(eistrace::lemma42_check(14));
  // sin(X)/X = 1 - X^2/6 + X^4/120 - ...
  QR s = eistrace::lemma42_lhs(6);
  CHECK(s.coeff_units(0) == Rational(1));
  CHECK(s.coeff_units(2) == Rational(-1, 6));
  CHECK(s.coeff_units(4) == Rational(1, 120));
  CHECK(s.coeff_units(1) == Rational(0));
}

TEST_CASE("crank residue classes mod 5") {
  auto tables = eistrace::crank_residue_tables(5, 14);
  auto p = eistrace::partition_counts(14);

  // Residue counts from the z-graded product match a direct count of the
  // crank statistic over partitions for n >= 2.
  for (long n = 2; n <= 14; ++n) {
    std::map<long, Integer> direct;
    for (const auto& lam : eistrace::partitions_of(n)) {
      long r = ((eistrace::crank_statistic(lam) % 5) + 5) % 5;
      direct[r] += 1;
    }
    Integer total(0);
    for (long r = 0; r < 5; ++r) {
      CHECK(tables[static_cast<size_t>(n)][static_cast<size_t>(r)] == direct[r]);
      total += direct[r];
    }
    CHECK(total == p[static_cast<size_t>(n)]);
  }

  // At n = 5j + 4 every residue class has p(n)/5 members.
  for (long n : {4L, 9L, 14L}) {
    Integer fifth = p[static_cast<size_t>(n)] / 5;
    for (long r = 0; r < 5; ++r)
      CHECK(tables[static_cast<size_t>(n)][static_cast<size_t>(r)] == fifth);
  }
}

TEST_CASE("equidistribution checks") {
  CHECK(eistrace::crank_congruence_check(5, 4, 3));
  CHECK(eistrace::crank_congruence_check(7, 5, 2));
  CHECK(eistrace::crank_congruence_check(11, 6, 1, 40));
}
