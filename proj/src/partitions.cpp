#include "eistrace/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace eistrace {

Partition::Partition(std::vector<long> mult) : m_(std::move(mult)) {
  for (long v : m_)
    if (v < 0) throw std::invalid_argument("negative multiplicity");
  while (!m_.empty() && m_.back() == 0) m_.pop_back();
}

Partition Partition::from_parts(const std::vector<long>& parts) {
  long top = 0;
  for (long p : parts) {
    if (p < 1) throw std::invalid_argument("parts must be positive");
    top = std::max(top, p);
  }
  std::vector<long> mult(static_cast<size_t>(top), 0);
  for (long p : parts) ++mult[static_cast<size_t>(p - 1)];
  return Partition(std::move(mult));
}

long Partition::size() const {
  long s = 0;
  for (size_t j = 0; j < m_.size(); ++j) s += static_cast<long>(j + 1) * m_[j];
  return s;
}

long Partition::length() const {
  long s = 0;
  for (long v : m_) s += v;
  return s;
}

long Partition::largest() const { return static_cast<long>(m_.size()); }

std::vector<long> Partition::parts() const {
  std::vector<long> out;
  for (size_t j = m_.size(); j-- > 0;)
    for (long r = 0; r < m_[j]; ++r) out.push_back(static_cast<long>(j + 1));
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long p : parts()) {
    if (!first) os << ",";
    os << p;
    first = false;
  }
  os << ")";
  return os.str();
}

namespace {

void enumerate_rec(long j, long remaining, std::vector<long>& mult,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(mult);
    return;
  }
  if (j > remaining) return;
  // Descending loop keeps the output in descending multiplicity-vector order.
  for (long m = remaining / j; m >= 0; --m) {
    mult[static_cast<size_t>(j - 1)] = m;
    enumerate_rec(j + 1, remaining - j * m, mult, out);
  }
  mult[static_cast<size_t>(j - 1)] = 0;
}

void parts_rec(long remaining, long cap, std::vector<long>& stack,
               const std::function<void(const std::vector<long>&)>& fn) {
  if (remaining == 0) {
    fn(stack);
    return;
  }
  for (long p = std::min(cap, remaining); p >= 1; --p) {
    stack.push_back(p);
    parts_rec(remaining - p, p, stack, fn);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long k) {
  if (k < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<long> mult(static_cast<size_t>(k), 0);
  enumerate_rec(1, k, mult, out);
  return out;
}

void for_each_partition(long n, const std::function<void(const std::vector<long>&)>& fn) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<long> stack;
  if (n == 0) {
    fn(stack);
    return;
  }
  parts_rec(n, n, stack, fn);
}

std::vector<Integer> partition_counts(long N) {
  std::vector<Integer> p(static_cast<size_t>(N) + 1);
  p[0] = 1;
  for (long n = 1; n <= N; ++n) {
    Integer acc = 0;
    for (long j = 1;; ++j) {
      long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      Integer term = p[static_cast<size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

Integer partition_count_exact(long n) { return partition_counts(n)[static_cast<size_t>(n)]; }

Rational z_lambda(const Partition& p) {
  Integer z = 1;
  const auto& m = p.mult();
  for (size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j + 1),
                  static_cast<unsigned long>(m[j]));
    z *= pw * factorial(m[j]);
  }
  return Rational(z);
}

std::vector<std::pair<Partition, Rational>> cycle_index(long k) {
  std::vector<std::pair<Partition, Rational>> out;
  for (Partition& p : partitions_of(k)) {
    Rational w = Rational(1) / z_lambda(p);
    out.emplace_back(std::move(p), std::move(w));
  }
  return out;
}

bool polya_check(long K, const std::vector<Rational>& xs) {
  if (K < 1) throw std::invalid_argument("polya_check needs K >= 1");
  if (static_cast<long>(xs.size()) < K)
    throw std::invalid_argument("polya_check needs x_1..x_K");
  long trunc = K + 1;
  // mpq comparisons assume canonical form; inputs may arrive as e.g. 3/6.
  std::vector<Rational> x(xs.begin(), xs.begin() + K);
  for (Rational& v : x) v.canonicalize();
  QSeries<Rational> lhs(1, trunc);
  for (long k = 0; k <= K; ++k) {
    Rational zk(0);
    for (const auto& [lam, w] : cycle_index(k)) {
      Rational mono(1);
      const auto& m = lam.mult();
      for (size_t j = 0; j < m.size(); ++j)
        if (m[j] != 0) mono *= rational_pow(x[j], m[j]);
      zk += w * mono;
    }
    lhs.set(k, zk);
  }
  QSeries<Rational> arg(1, trunc);
  for (long j = 1; j <= K; ++j) arg.set(j, x[static_cast<size_t>(j - 1)] / Rational(j));
  return lhs == exp_series(arg);
}

namespace {

Rational phi_common(const Partition& p, bool signed_variant, bool half_factorial) {
  Integer den = 1;
  const auto& m = p.mult();
  for (size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    long base = half_factorial ? static_cast<long>(j + 1) : 2 * static_cast<long>(j + 1);
    Integer f = factorial(base), pw;
    mpz_pow_ui(pw.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(m[j]));
    den *= factorial(m[j]) * pw;
  }
  Rational r = Rational(1) / Rational(den);
  if (signed_variant && p.length() % 2 == 1) r = -r;
  return r;
}

}  // namespace

Rational phi_lambda(const Partition& p) { return phi_common(p, true, false); }
Rational phi_crank(const Partition& p) { return phi_common(p, false, false); }
Rational phi_jacobi(const Partition& p) { return phi_common(p, true, true); }

long crank_statistic(const Partition& p) {
  if (p.mult().empty()) throw std::invalid_argument("crank of the empty partition");
  long w = p.ones();
  if (w == 0) return p.largest();
  long mu = 0;
  const auto& m = p.mult();
  for (size_t j = 0; j < m.size(); ++j)
    if (static_cast<long>(j + 1) > w) mu += m[j];
  return mu - w;
}

PartitionWeight partition_weight(const std::string& name) {
  if (name == "lambda") return phi_lambda;
  if (name == "crank") return phi_crank;
  if (name == "jacobi") return phi_jacobi;
  throw std::invalid_argument("unknown weight name: " + name);
}

}  // namespace eistrace
