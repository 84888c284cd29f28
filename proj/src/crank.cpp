#include "eistrace/crank.hpp"

#include <stdexcept>

#include "eistrace/partitions.hpp"

namespace eistrace {

namespace {

// Offset table cell for crank exponent m at level n.
inline Integer& cell(std::vector<std::vector<Integer>>& rows, long n, long m) {
  return rows[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
}

}  // namespace

CrankTable CrankTable::from_genfun(long N) {
  if (N < 1) throw std::invalid_argument("crank table needs N >= 1");
  // Dense DP over (q-power, z-power); |z-power| <= q-power throughout since
  // every z^{+-1} arrives attached to at least q^1.
  long W = 2 * N + 1;
  std::vector<std::vector<Integer>> a(static_cast<size_t>(N) + 1,
                                      std::vector<Integer>(static_cast<size_t>(W)));
  a[0][static_cast<size_t>(N)] = 1;  // index m + N
  for (long j = 1; j <= N; ++j) {
    // times (1 - q^j): descending in n so the subtrahend is the old value
    for (long n = N; n >= j; --n)
      for (long m = 0; m < W; ++m)
        a[static_cast<size_t>(n)][static_cast<size_t>(m)] -=
            a[static_cast<size_t>(n - j)][static_cast<size_t>(m)];
    // times 1/(1 - z q^j): ascending in n, shifting z up
    for (long n = j; n <= N; ++n)
      for (long m = W - 1; m >= 1; --m)
        a[static_cast<size_t>(n)][static_cast<size_t>(m)] +=
            a[static_cast<size_t>(n - j)][static_cast<size_t>(m - 1)];
    // times 1/(1 - z^{-1} q^j): ascending in n, shifting z down
    for (long n = j; n <= N; ++n)
      for (long m = 0; m < W - 1; ++m)
        a[static_cast<size_t>(n)][static_cast<size_t>(m)] +=
            a[static_cast<size_t>(n - j)][static_cast<size_t>(m + 1)];
  }
  std::vector<std::vector<Integer>> rows(static_cast<size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) {
    rows[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n + 1), Integer(0));
    for (long m = -N; m <= N; ++m) {
      const Integer& v = a[static_cast<size_t>(n)][static_cast<size_t>(m + N)];
      if (v == 0) continue;
      if (m < -n || m > n) throw std::logic_error("crank exponent escaped its level");
      cell(rows, n, m) = v;
    }
  }
  CrankTable t(N, std::move(rows));
  if (!t.symmetric()) throw std::logic_error("generating product lost z symmetry");
  return t;
}

CrankTable CrankTable::from_partitions(long N) {
  if (N < 1) throw std::invalid_argument("crank table needs N >= 1");
  if (N > 60) throw std::invalid_argument("combinatorial crank table capped at N = 60");
  std::vector<std::vector<Integer>> rows(static_cast<size_t>(N) + 1);
  for (long n = 0; n <= N; ++n)
    rows[static_cast<size_t>(n)].assign(static_cast<size_t>(2 * n + 1), Integer(0));
  cell(rows, 0, 0) = 1;  // empty partition, crank 0 slot by convention
  for (long n = 1; n <= N; ++n) {
    for_each_partition(n, [&](const std::vector<long>& parts) {
      Partition lam = Partition::from_parts(parts);
      cell(rows, n, crank_statistic(lam)) += 1;
    });
  }
  return CrankTable(N, std::move(rows));
}

Integer CrankTable::count(long m, long n) const {
  if (n < 0 || n > N_) throw std::invalid_argument("crank table level out of range");
  if (m < -n || m > n) return 0;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
}

bool CrankTable::symmetric() const {
  for (long n = 0; n <= N_; ++n)
    for (long m = 1; m <= n; ++m)
      if (count(m, n) != count(-m, n)) return false;
  return true;
}

QSeries<Rational> CrankTable::moment_series(long two_k) const {
  if (two_k < 0 || two_k % 2 != 0) throw std::invalid_argument("moment order must be even");
  QSeries<Rational> out(1, N_ + 1);
  for (long n = 0; n <= N_; ++n) {
    Integer acc = 0;
    for (long m = -n; m <= n; ++m) {
      const Integer& c = rows_[static_cast<size_t>(n)][static_cast<size_t>(m + n)];
      if (c == 0) continue;
      if (two_k == 0) {
        acc += c;
      } else {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m),
                      static_cast<unsigned long>(two_k));
        acc += pw * c;
      }
    }
    out.set(n, Rational(acc));
  }
  return out;
}

QSeries<Rational> crank_moment_definition(long two_k, long N) {
  return CrankTable::from_genfun(N).moment_series(two_k);
}

QSeries<Rational> crank_moment_corollary(long two_k, const EisensteinTable& tab) {
  if (two_k < 0 || two_k % 2 != 0) throw std::invalid_argument("moment order must be even");
  long k = two_k / 2, N = tab.terms();
  QSeries<Rational> acc(1, N + 1);
  for (long n = 0; n <= k; ++n) {
    Rational coeff = Rational(factorial(two_k)) /
                     (rational_pow(Rational(4), n) * Rational(factorial(2 * n + 1)));
    acc = acc + scale(tab.trace(k - n, phi_crank), coeff);
  }
  return (acc * invert(eta_pochhammer(N))).truncated(N + 1);
}

QSeries<Rational> crank_moment_lambert(long two_k, const EisensteinTable& tab) {
  if (two_k < 0 || two_k % 2 != 0) throw std::invalid_argument("moment order must be even");
  long k = two_k / 2, N = tab.terms();
  QSeries<Rational> acc(1, N + 1);
  for (const Partition& lam : partitions_of(k)) {
    // prod_j (1/m_j!) (2/(2j)!)^{m_j} = 2^{length} phi_c(lambda)
    Rational coeff = rational_pow(Rational(2), lam.length()) * phi_crank(lam);
    acc = acc + scale(tab.lambert_partition(lam), coeff);
  }
  acc = scale(acc, Rational(factorial(two_k)));
  return (acc * invert(eta_pochhammer(N))).truncated(N + 1);
}

BiSeries<Rational> theorem2_lhs(long K, long T, long N) {
  if (K < 1 || N < 1) throw std::invalid_argument("theorem2 needs K >= 1, N >= 1");
  long hi = std::min(T, 2 * K) + 1;
  BiSeries<Rational> out("X", 0, hi, 1, N + 1);
  CrankTable table = CrankTable::from_genfun(N);
  for (long k = 0; 2 * k < hi; ++k) {
    Rational c = Rational(1) / Rational(factorial(2 * k));
    if (k % 2 == 1) c = -c;
    out.set_row(2 * k, scale(table.moment_series(2 * k), c));
  }
  return out;
}

BiSeries<Rational> theorem2_rhs(long K, long T, long N) {
  if (K < 1 || N < 1) throw std::invalid_argument("theorem2 needs K >= 1, N >= 1");
  long hi = std::min(T, 2 * K) + 1;
  // 2 sin(X/2) with one extra row so the product reaches X^{hi-1}.
  BiSeries<Rational> sin_half("X", 0, hi + 2, 1, N + 1);
  for (long j = 1; j < hi + 2; j += 2) {
    Rational c = Rational(2) / (rational_pow(Rational(2), j) * Rational(factorial(j)));
    if (((j - 1) / 2) % 2 == 1) c = -c;
    sin_half.set_row(j, QSeries<Rational>::constant(c, N + 1));
  }
  EisensteinTable tab(2 * K, N);
  BiSeries<Rational> traces("X", -1, 2 * K, 1, N + 1);
  for (long k = 0; k <= K; ++k) {
    QSeries<Rational> tr = tab.trace(k, phi_crank);
    if (k % 2 == 1) tr = -tr;
    traces.set_row(2 * k - 1, std::move(tr));
  }
  return rowwise(sin_half * traces, invert(eta_pochhammer(N)));
}

bool theorem2_check(long K, long T, long N) {
  return bi_agree(theorem2_lhs(K, T, N), theorem2_rhs(K, T, N));
}

BiSeries<Rational> lemma41_lhs(long xorder, long N) {
  if (xorder < 2 || N < 1) throw std::invalid_argument("lemma41 needs xorder >= 2, N >= 1");
  long K = xorder / 2;
  EisensteinTable tab(2 * K, N);
  BiSeries<Rational> arg("X", 0, xorder + 1, 1, N + 1);
  for (long k = 1; k <= K; ++k) {
    // -2 (-4)^k / (2k)! times S_{2k-1} at X^{2k}
    Rational c = Rational(-2) * rational_pow(Rational(-4), k) / Rational(factorial(2 * k));
    arg.set_row(2 * k, scale(tab.lambert_S(2 * k - 1), c));
  }
  return bi_exp(arg);
}

BiSeries<Rational> lemma41_rhs(long xorder, long N) {
  if (xorder < 2 || N < 1) throw std::invalid_argument("lemma41 needs xorder >= 2, N >= 1");
  // 4 sin^2 X = sum_{r>=1} -2 (-4)^r / (2r)! X^{2r}
  BiSeries<Rational> sin_sq("X", 0, xorder + 1, 1, N + 1);
  for (long r = 1; 2 * r <= xorder; ++r) {
    Rational c = Rational(-2) * rational_pow(Rational(-4), r) / Rational(factorial(2 * r));
    sin_sq.set_row(2 * r, QSeries<Rational>::constant(c, N + 1));
  }
  BiSeries<Rational> acc("X", 0, xorder + 1, 1, N + 1);
  acc.set_row(0, QSeries<Rational>::constant(Rational(1), N + 1));
  for (long j = 1; j <= N; ++j) {
    QSeries<Rational> lam(1, N + 1);  // q^j/(1-q^j)^2 = sum_r r q^{jr}
    for (long r = 1; j * r <= N; ++r) lam.set(j * r, Rational(r));
    BiSeries<Rational> factor = rowwise(sin_sq, lam);
    factor.set_row(0, QSeries<Rational>::constant(Rational(1), N + 1));
    acc = acc * factor;
  }
  return acc;
}

bool lemma41_check(long xorder, long N) {
  return bi_agree(lemma41_lhs(xorder, N), lemma41_rhs(xorder, N));
}

QSeries<Rational> lemma42_lhs(long T) {
  if (T < 2) throw std::invalid_argument("lemma42 needs T >= 2");
  QSeries<Rational> s(1, T + 1);  // sin(X)/X
  for (long r = 0; 2 * r <= T; ++r) {
    Rational c = Rational(1) / Rational(factorial(2 * r + 1));
    if (r % 2 == 1) c = -c;
    s.set(2 * r, c);
  }
  return s;
}

QSeries<Rational> lemma42_rhs(long T) {
  if (T < 2) throw std::invalid_argument("lemma42 needs T >= 2");
  QSeries<Rational> arg(1, T + 1);
  for (long k = 1; 2 * k <= T; ++k)
    arg.set(2 * k, rational_pow(Rational(-4), k) * bernoulli_number(2 * k) /
                       Rational(2 * k * factorial(2 * k)));
  return exp_series(arg);
}

bool lemma42_check(long T) { return lemma42_lhs(T) == lemma42_rhs(T); }

std::vector<std::vector<Integer>> crank_residue_tables(long M, long N) {
  if (M < 2 || N < 0) throw std::invalid_argument("residue table needs M >= 2, N >= 0");
  // Same product DP as from_genfun but with the z-exponent tracked mod M.
  std::vector<std::vector<Integer>> a(static_cast<size_t>(N) + 1,
                                      std::vector<Integer>(static_cast<size_t>(M)));
  a[0][0] = 1;
  for (long j = 1; j <= N; ++j) {
    for (long n = N; n >= j; --n)
      for (long r = 0; r < M; ++r)
        a[static_cast<size_t>(n)][static_cast<size_t>(r)] -=
            a[static_cast<size_t>(n - j)][static_cast<size_t>(r)];
    for (long n = j; n <= N; ++n)
      for (long r = 0; r < M; ++r)
        a[static_cast<size_t>(n)][static_cast<size_t>(r)] +=
            a[static_cast<size_t>(n - j)][static_cast<size_t>(mod_floor(r - 1, M))];
    for (long n = j; n <= N; ++n)
      for (long r = 0; r < M; ++r)
        a[static_cast<size_t>(n)][static_cast<size_t>(r)] +=
            a[static_cast<size_t>(n - j)][static_cast<size_t>(mod_floor(r + 1, M))];
  }
  return a;
}

bool crank_congruence_check(long M, long offset, long j_max, long arg_cap) {
  long top = M * j_max + offset;
  if (arg_cap >= 0) top = std::min(top, arg_cap);
  if (top < offset) return true;
  auto counts = crank_residue_tables(M, top);
  auto p = partition_counts(top);
  for (long j = 0; j <= j_max; ++j) {
    long n = M * j + offset;
    if (n > top) break;
    const Integer& pn = p[static_cast<size_t>(n)];
    for (long r = 0; r < M; ++r)
      if (counts[static_cast<size_t>(n)][static_cast<size_t>(r)] * M != pn) return false;
  }
  return true;
}

}  // namespace eistrace
