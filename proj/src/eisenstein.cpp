#include "eistrace/eisenstein.hpp"

#include <stdexcept>

namespace eistrace {

Rational bernoulli_number(long n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be nonnegative");
  std::vector<Rational> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc(0);
    for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[static_cast<size_t>(j)];
    b[static_cast<size_t>(m)] = -acc / Rational(m + 1);
  }
  return b[static_cast<size_t>(n)];
}

Integer sigma_divisor(long nu, long n) {
  if (nu < 0 || n < 1) throw std::invalid_argument("sigma_divisor needs nu >= 0, n >= 1");
  Integer acc = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(nu));
    acc += pw;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(nu));
      acc += pw;
    }
  }
  return acc;
}

QSeries<Rational> eisenstein_G(long weight, long N) {
  if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
  if (N < 1) throw std::invalid_argument("q-truncation must be >= 1");
  QSeries<Rational> g(1, N + 1);
  g.set(0, -bernoulli_number(weight) / Rational(weight));
  for (long n = 1; n <= N; ++n) g.set(n, Rational(2 * sigma_divisor(weight - 1, n)));
  return g;
}

EisensteinTable::EisensteinTable(long max_weight, long N) : max_weight_(max_weight), N_(N) {
  if (max_weight < 2 || max_weight % 2 != 0)
    throw std::invalid_argument("max weight must be even and >= 2");
  if (N < 1) throw std::invalid_argument("q-truncation must be >= 1");
  long K = max_weight / 2;
  bernoulli_.resize(static_cast<size_t>(max_weight) + 1);
  bernoulli_[0] = 1;
  for (long m = 1; m <= max_weight; ++m) {
    Rational acc(0);
    for (long j = 0; j < m; ++j)
      acc += Rational(binomial(m + 1, j)) * bernoulli_[static_cast<size_t>(j)];
    bernoulli_[static_cast<size_t>(m)] = -acc / Rational(m + 1);
  }
  for (long k = 1; k <= K; ++k) {
    g_.push_back(eisenstein_G(2 * k, N));
    // S_{2k-1} expanded directly as sum_m m^{2k-1} q^m/(1-q^m); no constant
    // term, so B_{2k}/4k + G_{2k}/2 reproduces it exactly.
    QSeries<Rational> s(1, N + 1);
    for (long m = 1; m <= N; ++m) {
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m),
                    static_cast<unsigned long>(2 * k - 1));
      for (long e = m; e <= N; e += m) s.add_to(e, Rational(pw));
    }
    s_.push_back(std::move(s));
  }
  for (long k = 1; k <= K; ++k) {
    std::vector<QSeries<Rational>> pw;
    pw.push_back(QSeries<Rational>::constant(Rational(1), N + 1));
    for (long e = 1; e * k <= K; ++e)
      pw.push_back((pw.back() * g_[static_cast<size_t>(k - 1)]).truncated(N + 1));
    gpow_.push_back(std::move(pw));
  }
}

const Rational& EisensteinTable::bernoulli(long n) const {
  if (n < 0 || n > max_weight_) throw std::invalid_argument("Bernoulli index out of table range");
  return bernoulli_[static_cast<size_t>(n)];
}

const QSeries<Rational>& EisensteinTable::G(long weight) const {
  if (weight < 2 || weight % 2 != 0 || weight > max_weight_)
    throw std::invalid_argument("weight out of table range");
  return g_[static_cast<size_t>(weight / 2 - 1)];
}

const QSeries<Rational>& EisensteinTable::lambert_S(long index) const {
  if (index < 1 || index % 2 != 1 || index + 1 > max_weight_)
    throw std::invalid_argument("Lambert index out of table range");
  return s_[static_cast<size_t>((index + 1) / 2 - 1)];
}

const QSeries<Rational>& EisensteinTable::G_power(long weight, long e) const {
  if (weight < 2 || weight % 2 != 0 || weight > max_weight_)
    throw std::invalid_argument("weight out of table range");
  const auto& pw = gpow_[static_cast<size_t>(weight / 2 - 1)];
  if (e < 0 || e >= static_cast<long>(pw.size()))
    throw std::invalid_argument("power out of table range");
  return pw[static_cast<size_t>(e)];
}

QSeries<Rational> EisensteinTable::G_partition(const Partition& lam) const {
  QSeries<Rational> acc = QSeries<Rational>::constant(Rational(1), N_ + 1);
  const auto& m = lam.mult();
  for (size_t j = 0; j < m.size(); ++j)
    if (m[j] != 0)
      acc = (acc * G_power(2 * static_cast<long>(j + 1), m[j])).truncated(N_ + 1);
  return acc;
}

QSeries<Rational> EisensteinTable::trace(long k, const PartitionWeight& phi) const {
  if (k < 0 || 2 * k > max_weight_) throw std::invalid_argument("trace order out of table range");
  QSeries<Rational> acc(1, N_ + 1);
  for (const Partition& lam : partitions_of(k)) acc = acc + scale(G_partition(lam), phi(lam));
  return acc;
}

QSeries<Rational> EisensteinTable::lambert_partition(const Partition& lam) const {
  QSeries<Rational> acc = QSeries<Rational>::constant(Rational(1), N_ + 1);
  const auto& m = lam.mult();
  for (size_t j = 0; j < m.size(); ++j)
    for (long e = 0; e < m[j]; ++e)
      acc = (acc * lambert_S(2 * static_cast<long>(j + 1) - 1)).truncated(N_ + 1);
  return acc;
}

}  // namespace eistrace
