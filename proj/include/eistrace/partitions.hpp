#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eistrace/qseries.hpp"
#include "eistrace/rational.hpp"

namespace eistrace {

// Integer partition stored by multiplicities: mult()[j-1] is the number of
// parts equal to j.  The default-constructed value is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> mult);
  static Partition from_parts(const std::vector<long>& parts);

  const std::vector<long>& mult() const { return m_; }
  long multiplicity(long j) const {
    return (j >= 1 && j <= static_cast<long>(m_.size())) ? m_[static_cast<size_t>(j - 1)] : 0;
  }
  long size() const;      // sum of parts
  long length() const;    // number of parts
  long largest() const;   // largest part, 0 when empty
  long ones() const { return multiplicity(1); }
  std::vector<long> parts() const;  // nonincreasing
  std::string str() const;          // e.g. "(3,1,1)", "()"

  bool operator==(const Partition&) const = default;

 private:
  std::vector<long> m_;  // no trailing zeros
};

// All partitions of k, each once, ordered by descending lexicographic
// multiplicity vector: (1^k) first, (k) last.
std::vector<Partition> partitions_of(long k);

// Streams the nonincreasing parts vector of every partition of n.
void for_each_partition(long n, const std::function<void(const std::vector<long>&)>& fn);

// p(0..N) by the pentagonal-number recurrence.
std::vector<Integer> partition_counts(long N);
Integer partition_count_exact(long n);

// z_lambda = prod_j j^{m_j} m_j!, the symmetric-group centralizer order.
Rational z_lambda(const Partition& p);

// Cycle index of the symmetric group on k letters: pairs (lambda, 1/z_lambda).
std::vector<std::pair<Partition, Rational>> cycle_index(long k);

// Checks sum_{k<=K} Z_k(x) y^k = exp(sum_{j<=K} x_j y^j / j) through y^K.
bool polya_check(long K, const std::vector<Rational>& xs);

// The three trace weights; the empty partition maps to 1 for each.
Rational phi_lambda(const Partition& p);   // (-1)^len / prod m_j! ((2j)!)^{m_j}
Rational phi_crank(const Partition& p);    //        1 / prod m_j! ((2j)!)^{m_j}
Rational phi_jacobi(const Partition& p);   // (-1)^len / prod m_j! (j!)^{m_j}

// Largest part when there are no ones; otherwise (#parts greater than the
// number of ones) minus (number of ones).  Rejects the empty partition.
long crank_statistic(const Partition& p);

using PartitionWeight = std::function<Rational(const Partition&)>;

// Resolves the CLI names "lambda", "crank", "jacobi".
PartitionWeight partition_weight(const std::string& name);

}  // namespace eistrace
