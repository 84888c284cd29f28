#pragma once

#include <vector>

#include "eistrace/partitions.hpp"
#include "eistrace/qseries.hpp"

namespace eistrace {

// B_n with the B_1 = -1/2 convention.
Rational bernoulli_number(long n);

// sum of d^nu over divisors d of n.
Integer sigma_divisor(long nu, long n);

// G_{2k} = -B_{2k}/(2k) + 2 sum_{n<=N} sigma_{2k-1}(n) q^n, complete through q^N.
QSeries<Rational> eisenstein_G(long weight, long N);

// Caches G_{2k}, the Lambert sums S_{2k-1}, their powers, and Bernoulli
// numbers for weights up to max_weight, all complete through q^N.
class EisensteinTable {
 public:
  EisensteinTable(long max_weight, long N);

  long max_weight() const { return max_weight_; }
  long terms() const { return N_; }

  const Rational& bernoulli(long n) const;
  const QSeries<Rational>& G(long weight) const;          // even weight in [2, max_weight]
  const QSeries<Rational>& lambert_S(long index) const;   // S_index, odd index
  const QSeries<Rational>& G_power(long weight, long e) const;

  // G_lambda = prod_j G_{2j}^{m_j}; the empty partition gives 1.
  QSeries<Rational> G_partition(const Partition& lam) const;

  // Tr_k(phi) = sum_{lambda |- k} phi(lambda) G_lambda; Tr_0 = 1.
  QSeries<Rational> trace(long k, const PartitionWeight& phi) const;

  // S_lambda = prod_j S_{2j-1}^{m_j}.
  QSeries<Rational> lambert_partition(const Partition& lam) const;

 private:
  long max_weight_, N_;
  std::vector<Rational> bernoulli_;                     // B_0..B_max_weight
  std::vector<QSeries<Rational>> g_;                    // g_[k-1] = G_{2k}
  std::vector<QSeries<Rational>> s_;                    // s_[k-1] = S_{2k-1}
  std::vector<std::vector<QSeries<Rational>>> gpow_;    // gpow_[k-1][e] = G_{2k}^e
};

}  // namespace eistrace
