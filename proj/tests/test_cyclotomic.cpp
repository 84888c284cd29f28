#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "eistrace/cyclotomic.hpp"

using eistrace::Cyclo;
using eistrace::Rational;

namespace {

Cyclo random_cyclo(std::mt19937& rng, long m) {
  std::vector<Rational> c(static_cast<size_t>(eistrace::euler_phi(m)));
  for (auto& v : c) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 5) + 1;
    v = Rational(num) / Rational(den);
  }
  return Cyclo(m, std::move(c));
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  long phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};  // phi(1..12)
  for (long m = 1; m <= 12; ++m) CHECK(eistrace::euler_phi(m) == phi[m - 1]);

  // Phi_12(x) = x^4 - x^2 + 1
  const auto& p12 = eistrace::cyclotomic_poly(12);
  REQUIRE(p12.size() == 5);
  CHECK(p12[0] == Rational(1));
  CHECK(p12[1] == Rational(0));
  CHECK(p12[2] == Rational(-1));
  CHECK(p12[3] == Rational(0));
  CHECK(p12[4] == Rational(1));
}

TEST_CASE("root of unity relations") {
  Cyclo z3 = Cyclo::zeta(3);
  CHECK(z3 * z3 * z3 == Cyclo(Rational(1)));
  CHECK(z3 * z3 + z3 + Cyclo(Rational(1)) == Cyclo());
  Cyclo z4 = Cyclo::zeta(4);
  CHECK(z4 * z4 == Cyclo(Rational(-1)));
  // zeta_6 = -zeta_3^2
  CHECK(Cyclo::zeta(6).promoted(6) == -(z3 * z3).promoted(6));

  // Full Galois orbits sum to zero (prime conductors) or to the Moebius
  // value (zeta_12 orbit: mu(12) = 0 as well).
  for (long m : {5L, 7L, 11L}) {
    Cyclo s;
    for (long j = 1; j < m; ++j) s = s + eistrace::zeta_power(m, j);
    CHECK(s == Cyclo(Rational(-1)));
  }
}

TEST_CASE("mixed conductor arithmetic promotes to the lcm") {
  Cyclo z3 = Cyclo::zeta(3), z4 = Cyclo::zeta(4);
  Cyclo prod = z3 * z4;
  CHECK(prod.conductor() == 12);
  CHECK(prod == eistrace::zeta_power(12, 7));  // zeta_3 zeta_4 = zeta_12^{4+3}
  CHECK((z3 + z4).conductor() == 12);
}

TEST_CASE("exact inverse") {
  // 1/(1 - zeta_3) = (1 - zeta_3^2)/3 = 2/3 + zeta_3/3
  Cyclo d = Cyclo(Rational(1)) - Cyclo::zeta(3);
  Cyclo inv = d.inv();
  CHECK(inv == Cyclo(3, {Rational(2, 3), Rational(1, 3)}));
  CHECK(d * inv == Cyclo(Rational(1)));
  CHECK_THROWS_AS(Cyclo().inv(), eistrace::SeriesDomainError);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(0xC1C0);
  for (int trial = 0; trial < 10; ++trial) {
    Cyclo a = random_cyclo(rng, 5);
    Cyclo b = random_cyclo(rng, 5);
    Cyclo c = random_cyclo(rng, 5);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * a.inv() == Cyclo(Rational(1)));
      CHECK(a.inv().inv() == a);
    }
  }
}

TEST_CASE("numeric embedding is a homomorphism") {
  std::mt19937 rng(0xE3BD);
  for (int trial = 0; trial < 8; ++trial) {
    Cyclo a = random_cyclo(rng, 12);
    Cyclo b = random_cyclo(rng, 12);
    std::complex<double> lhs = (a * b).embed();
    std::complex<double> rhs = a.embed() * b.embed();
    CHECK(std::abs(lhs - rhs) < 1e-9);
    CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12);
  }
  double angle = 2.0 * std::numbers::pi / 12.0;
  CHECK(std::abs(Cyclo::zeta(12).embed() - std::polar(1.0, angle)) < 1e-15);
}

TEST_CASE("rationality detection") {
  Cyclo z3 = Cyclo::zeta(3);
  Cyclo r = z3 + z3 * z3;  // = -1
  CHECK(r.is_rational());
  CHECK(r.rational_part() == Rational(-1));
  CHECK(!z3.is_rational());
  CHECK_THROWS_AS(z3.rational_part(), eistrace::SeriesDomainError);
}

TEST_CASE("conductor limit") {
  CHECK_THROWS_AS(Cyclo::zeta(13), eistrace::ConductorLimitError);
  CHECK_THROWS_AS(eistrace::zeta_power(14, 1), eistrace::ConductorLimitError);
  CHECK_THROWS_AS(Cyclo::zeta(3).promoted(24), eistrace::ConductorLimitError);
}

TEST_CASE("ring traits roots of unity") {
  using RT = eistrace::ring_traits<Cyclo>;
  CHECK(RT::root_of_unity(0, 5) == Cyclo(Rational(1)));
  CHECK(RT::root_of_unity(7, 5) == eistrace::zeta_power(5, 2));
  CHECK(RT::root_of_unity(-1, 5) == eistrace::zeta_power(5, 4));
  using RQ = eistrace::ring_traits<Rational>;
  CHECK(RQ::root_of_unity(3, 2) == Rational(-1));
  CHECK(RQ::root_of_unity(4, 2) == Rational(1));
}
