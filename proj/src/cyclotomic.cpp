#include "eistrace/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace eistrace {

namespace {

// Ascending-degree rational polynomials with exact division helpers.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient a / b; remainder must vanish for the uses below.
Poly poly_divide(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
  }
  return q;
}

// Quotient and remainder for the extended Euclid below.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !b.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
  }
  return {std::move(q), std::move(a)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

struct ConductorData {
  long phi = 0;
  Poly poly;                       // Phi_m, monic of degree phi
  std::vector<Poly> pow;           // pow[e]: x^e mod Phi_m, length phi each
};

const std::array<ConductorData, kMaxConductor + 1>& conductor_tables() {
  static const std::array<ConductorData, kMaxConductor + 1> tables = [] {
    std::array<ConductorData, kMaxConductor + 1> t{};
    for (long m = 1; m <= kMaxConductor; ++m) {
      // x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
      Poly num(static_cast<size_t>(m) + 1, Rational(0));
      num[0] = Rational(-1);
      num[static_cast<size_t>(m)] = Rational(1);
      for (long d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide(std::move(num), t[static_cast<size_t>(d)].poly);
      auto& cd = t[static_cast<size_t>(m)];
      cd.poly = std::move(num);
      cd.phi = static_cast<long>(cd.poly.size()) - 1;
      long top = std::max(2 * cd.phi - 2, m - 1);
      cd.pow.resize(static_cast<size_t>(top) + 1);
      for (long e = 0; e <= top; ++e) {
        Poly row(static_cast<size_t>(cd.phi), Rational(0));
        if (e < cd.phi) {
          row[static_cast<size_t>(e)] = Rational(1);
        } else {
          // x^e = x * x^{e-1}; fold the overflow back with the monic relation
          // x^phi = -(poly[0] + ... + poly[phi-1] x^{phi-1}).
          const Poly& prev = cd.pow[static_cast<size_t>(e - 1)];
          Rational top_coeff = prev[static_cast<size_t>(cd.phi - 1)];
          for (long j = cd.phi - 1; j >= 1; --j) row[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
          for (long j = 0; j < cd.phi; ++j) row[static_cast<size_t>(j)] -= top_coeff * cd.poly[static_cast<size_t>(j)];
        }
        cd.pow[static_cast<size_t>(e)] = std::move(row);
      }
    }
    return t;
  }();
  return tables;
}

const ConductorData& data_for(long m) {
  if (m < 1) throw SeriesDomainError("conductor must be positive");
  if (m > kMaxConductor)
    throw ConductorLimitError("conductor " + std::to_string(m) + " exceeds exact limit " +
                              std::to_string(kMaxConductor));
  return conductor_tables()[static_cast<size_t>(m)];
}

// Reduce an arbitrary-degree polynomial in zeta_m using the power table.
std::vector<Rational> reduce_poly(long m, const Poly& p) {
  const ConductorData& cd = data_for(m);
  std::vector<Rational> out(static_cast<size_t>(cd.phi), Rational(0));
  for (size_t e = 0; e < p.size(); ++e) {
    if (p[e] == 0) continue;
    const Poly& row = cd.pow.at(e);
    for (long j = 0; j < cd.phi; ++j) out[static_cast<size_t>(j)] += p[e] * row[static_cast<size_t>(j)];
  }
  return out;
}

}  // namespace

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_poly(long m) { return data_for(m).poly; }

Cyclo::Cyclo(long m, std::vector<Rational> coords) : m_(m), c_(std::move(coords)) {
  const ConductorData& cd = data_for(m);
  if (static_cast<long>(c_.size()) != cd.phi)
    throw SeriesDomainError("coordinate vector length must equal phi(conductor)");
}

Cyclo Cyclo::zeta(long m, long j) {
  const ConductorData& cd = data_for(m);
  long r = mod_floor(j, m);
  std::vector<Rational> coords = cd.pow.at(static_cast<size_t>(r));
  return Cyclo(m, std::move(coords));
}

bool Cyclo::is_zero() const {
  for (const Rational& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational Cyclo::rational_part() const {
  if (!is_rational()) throw SeriesDomainError("element is not rational");
  return c_[0];
}

Cyclo Cyclo::promoted(long big) const {
  if (big == m_) return *this;
  if (big % m_ != 0) throw SeriesDomainError("promotion target must be a multiple of the conductor");
  const ConductorData& cd = data_for(big);
  long step = big / m_;
  std::vector<Rational> out(static_cast<size_t>(cd.phi), Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const Poly& row = cd.pow.at(j * static_cast<size_t>(step));
    for (long t = 0; t < cd.phi; ++t) out[static_cast<size_t>(t)] += c_[j] * row[static_cast<size_t>(t)];
  }
  return Cyclo(big, std::move(out));
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw SeriesDomainError("inversion of zero cyclotomic element");
  // Extended Euclid against Phi_m; the gcd is a nonzero rational because the
  // cyclotomic polynomial is irreducible over Q.
  Poly r0 = data_for(m_).poly;
  Poly r1(c_);
  poly_trim(r1);
  Poly t0{}, t1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly tnew = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tnew);
  }
  if (r1.empty()) throw SeriesDomainError("unexpected common factor with cyclotomic polynomial");
  Rational g = r1[0];
  for (Rational& v : t1) v /= g;
  return Cyclo(m_, reduce_poly(m_, t1));
}

std::complex<double> Cyclo::embed() const {
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(m_));
  std::complex<double> acc(0.0, 0.0);
  for (size_t j = c_.size(); j-- > 0;) acc = acc * z + std::complex<double>(c_[j].get_d(), 0.0);
  return acc;
}

std::string Cyclo::str() const {
  if (is_rational()) return rational_to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational v = c_[j];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (j == 0) {
      os << rational_to_string(v);
    } else {
      if (v != 1) os << rational_to_string(v) << "*";
      os << "zeta" << m_;
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::pair<Cyclo, Cyclo> unified(const Cyclo& a, const Cyclo& b) {
  long big = lcm_long(a.conductor(), b.conductor());
  return {a.promoted(big), b.promoted(big)};
}

}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  auto [x, y] = unified(a, b);
  std::vector<Rational> out = x.coords();
  for (size_t j = 0; j < out.size(); ++j) out[j] += y.coords()[j];
  return Cyclo(x.conductor(), std::move(out));
}

Cyclo operator-(const Cyclo& a) {
  std::vector<Rational> out = a.coords();
  for (Rational& v : out) v = -v;
  return Cyclo(a.conductor(), std::move(out));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  auto [x, y] = unified(a, b);
  Poly prod = poly_mul(x.coords(), y.coords());
  poly_trim(prod);
  return Cyclo(x.conductor(), reduce_poly(x.conductor(), prod));
}

Cyclo operator*(const Cyclo& a, const Rational& r) {
  std::vector<Rational> out = a.coords();
  for (Rational& v : out) v *= r;
  return Cyclo(a.conductor(), std::move(out));
}

Cyclo operator*(const Rational& r, const Cyclo& a) { return a * r; }

bool operator==(const Cyclo& a, const Cyclo& b) {
  auto [x, y] = unified(a, b);
  return x.coords() == y.coords();
}

Cyclo zeta_power(long m, long j) { return Cyclo::zeta(m, j); }

}  // namespace eistrace
