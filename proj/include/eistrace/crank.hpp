#pragma once

#include <vector>

#include "eistrace/biseries.hpp"
#include "eistrace/eisenstein.hpp"
#include "eistrace/qseries.hpp"

namespace eistrace {

// Partition counts by crank value: rows_[n] holds M(m, n) for -n <= m <= n.
// Two constructions: expanding the generating product
// prod_n (1-q^n)/((1-z q^n)(1-z^{-1} q^n)), or counting the crank statistic
// over partitions.  They agree for n >= 2 and differ at n = 1 by design.
class CrankTable {
 public:
  static CrankTable from_genfun(long N);
  static CrankTable from_partitions(long N);

  long terms() const { return N_; }
  Integer count(long m, long n) const;  // 0 outside |m| <= n
  bool symmetric() const;               // count(m,n) == count(-m,n) everywhere

  // C_{2k}(q) = sum_n (sum_m m^{2k} M(m,n)) q^n, complete through q^N.
  QSeries<Rational> moment_series(long two_k) const;

 private:
  CrankTable(long N, std::vector<std::vector<Integer>> rows)
      : N_(N), rows_(std::move(rows)) {}
  long N_;
  std::vector<std::vector<Integer>> rows_;
};

// The three moment routes.  All are complete through q^N; the table variants
// reuse a prebuilt table, the eager variants build what they need.
QSeries<Rational> crank_moment_definition(long two_k, long N);
QSeries<Rational> crank_moment_corollary(long two_k, const EisensteinTable& tab);
QSeries<Rational> crank_moment_lambert(long two_k, const EisensteinTable& tab);

// sum_{k<=K} (-1)^k C_{2k}(q) X^{2k}/(2k)!  with C from the genfun table.
BiSeries<Rational> theorem2_lhs(long K, long T, long N);
// (2 sin(X/2)/(q;q)) * sum_{k<=K} (-1)^k Tr_k(phi_c) X^{2k-1}.
BiSeries<Rational> theorem2_rhs(long K, long T, long N);
bool theorem2_check(long K, long T, long N);

// exp(-2 sum_k S_{2k-1}/(2k)! (-4X^2)^k)  versus
// prod_j (1 + 4 sin^2(X) q^j/(1-q^j)^2), through (X^xorder, q^N).
BiSeries<Rational> lemma41_lhs(long xorder, long N);
BiSeries<Rational> lemma41_rhs(long xorder, long N);
bool lemma41_check(long xorder, long N);

// sin(X)/X  versus  exp(sum_k (-4)^k B_{2k}/((2k)(2k)!) X^{2k}), through X^T.
QSeries<Rational> lemma42_lhs(long T);
QSeries<Rational> lemma42_rhs(long T);
bool lemma42_check(long T);

// counts[n][r] = number of partitions of n with crank congruent to r mod M,
// from the generating product with z specialized to an M-th root of unity
// grading (exact integer DP).  Valid as partition counts for n >= 2.
std::vector<std::vector<Integer>> crank_residue_tables(long M, long N);

// Equidistribution at n = M*j + offset for j = 0..j_max; arguments above
// arg_cap are skipped when arg_cap >= 0.
bool crank_congruence_check(long M, long offset, long j_max, long arg_cap = -1);

}  // namespace eistrace
