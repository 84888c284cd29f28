#include "eistrace/verify.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "eistrace/crank.hpp"
#include "eistrace/jacobi.hpp"
#include "eistrace/lattice.hpp"

namespace eistrace {

namespace {

std::string cstr(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

std::string dstr(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

struct Runner {
  VerifyReport rep;
  bool ok = true;

  void fail(std::string loc, std::string lhs, std::string rhs) {
    if (ok) rep.first_discrepancy = Discrepancy{std::move(loc), std::move(lhs), std::move(rhs)};
    ok = false;
  }

  template <class T>
  void check_series(const QSeries<T>& a, const QSeries<T>& b, const std::string& what) {
    if (!ok) return;
    if (auto e = first_difference(a, b)) {
      auto [ua, ub] = unify(a, b);
      fail(what + " at q^(" + std::to_string(*e) + "/" + std::to_string(ua.denom()) + ")",
           ring_traits<T>::display(ua.coeff_units(*e)), ring_traits<T>::display(ub.coeff_units(*e)));
    }
  }

  template <class T>
  void check_bi(const BiSeries<T>& a, const BiSeries<T>& b, const std::string& what) {
    if (!ok) return;
    if (auto d = first_bi_difference(a, b)) {
      auto [t, e] = *d;
      auto [ra, rb] = unify(a.row(t), b.row(t));
      fail(what + " at " + a.var() + "^" + std::to_string(t) + " q^(" + std::to_string(e) + "/" +
               std::to_string(ra.denom()) + ")",
           ring_traits<T>::display(ra.coeff_units(e)), ring_traits<T>::display(rb.coeff_units(e)));
    }
  }

  void check_rational(const Rational& a, const Rational& b, const std::string& what) {
    if (!ok) return;
    if (a != b) fail(what, rational_to_string(a), rational_to_string(b));
  }

  void check_integer(const Integer& a, const Integer& b, const std::string& what) {
    if (!ok) return;
    if (a != b) fail(what, a.get_str(), b.get_str());
  }

  void check_close(std::complex<double> a, std::complex<double> b, double tol,
                   const std::string& what) {
    if (!ok) return;
    if (!(std::abs(a - b) <= tol)) fail(what + " (tol " + dstr(tol) + ")", cstr(a), cstr(b));
  }

  void check_true(bool cond, const std::string& what, const std::string& lhs,
                  const std::string& rhs) {
    if (!ok) return;
    if (!cond) fail(what, lhs, rhs);
  }
};

long pick(long value, long fallback) { return value < 0 ? fallback : value; }

Integer sigma_brute(long nu, long n) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(nu));
    s += p;
  }
  return s;
}

// Constants and low-order coefficients of the weight 2, 4, 6 series against
// the displayed values and a direct divisor-sum oracle.
void suite_examples(Runner& r, const SuiteOptions& opt) {
  long N = pick(opt.terms, 30);
  r.rep.params["terms"] = std::to_string(N);
  const std::vector<std::pair<long, Rational>> constants = {
      {2, Rational(-1, 12)}, {4, Rational(1, 120)}, {6, Rational(-1, 252)}};
  const std::map<long, std::vector<long>> displayed = {
      {2, {2, 6, 8, 14, 12, 24}}, {4, {2, 18, 56, 146, 252}}, {6, {2, 66, 488}}};
  for (const auto& [w, c0] : constants) {
    QSeries<Rational> g = eisenstein_G(w, N);
    std::string name = "G_" + std::to_string(w);
    r.check_rational(g.coeff(0, 1), c0, name + " constant");
    const std::vector<long>& low = displayed.at(w);
    for (size_t n = 1; n <= low.size() && static_cast<long>(n) <= N; ++n)
      r.check_rational(g.coeff(static_cast<long>(n), 1), Rational(low[n - 1]),
                       name + " coefficient of q^" + std::to_string(n));
    for (long n = 1; n <= N; ++n)
      r.check_rational(g.coeff(n, 1), Rational(2 * sigma_brute(w - 1, n)),
                       name + " divisor sum at q^" + std::to_string(n));
    if (!r.ok) return;
  }
}

void suite_polya(Runner& r, const SuiteOptions& opt) {
  long K = pick(opt.k, 8);
  r.rep.params["k"] = std::to_string(K);
  r.rep.params["seed"] = std::to_string(opt.seed);
  using Entry = std::pair<std::vector<long>, Rational>;
  const std::map<long, std::vector<Entry>> expected = {
      {1, {{{1}, Rational(1)}}},
      {2, {{{1, 1}, Rational(1, 2)}, {{2}, Rational(1, 2)}}},
      {3, {{{1, 1, 1}, Rational(1, 6)}, {{2, 1}, Rational(1, 2)}, {{3}, Rational(1, 3)}}}};
  for (const auto& [k, want] : expected) {
    auto got = cycle_index(k);
    if (got.size() != want.size()) {
      r.fail("cycle index size for k=" + std::to_string(k), std::to_string(got.size()),
             std::to_string(want.size()));
      return;
    }
    for (size_t i = 0; i < want.size(); ++i) {
      std::string where =
          "cycle index k=" + std::to_string(k) + " entry " + std::to_string(i);
      r.check_true(got[i].first == Partition::from_parts(want[i].first), where + " partition",
                   got[i].first.str(), Partition::from_parts(want[i].first).str());
      r.check_rational(got[i].second, want[i].second, where + " coefficient");
    }
  }
  std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
  for (int trial = 0; trial < 20 && r.ok; ++trial) {
    std::vector<Rational> xs;
    for (long j = 0; j < K; ++j) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = static_cast<long>(rng() % 9) + 1;
      xs.push_back(Rational(num) / Rational(den));
    }
    r.check_true(polya_check(K, xs), "cycle index specialization trial " + std::to_string(trial),
                 "exp identity holds", "exp identity fails");
  }
}

void suite_lemma41(Runner& r, const SuiteOptions& opt) {
  long xorder = pick(opt.zorder, 10), N = pick(opt.terms, 15);
  r.rep.params["zorder"] = std::to_string(xorder);
  r.rep.params["terms"] = std::to_string(N);
  r.check_bi(lemma41_lhs(xorder, N), lemma41_rhs(xorder, N),
             "crank deviation exponential vs product");
}

void suite_lemma42(Runner& r, const SuiteOptions& opt) {
  long T = pick(opt.terms, 20);
  r.rep.params["terms"] = std::to_string(T);
  r.check_series(lemma42_lhs(T), lemma42_rhs(T), "half-angle sinc exponential");
}

void suite_theorem2(Runner& r, const SuiteOptions& opt) {
  long K = pick(opt.k, 5), T = pick(opt.zorder, 10), N = pick(opt.terms, 20);
  r.rep.params["k"] = std::to_string(K);
  r.rep.params["zorder"] = std::to_string(T);
  r.rep.params["terms"] = std::to_string(N);
  r.check_bi(theorem2_lhs(K, T, N), theorem2_rhs(K, T, N), "bivariate crank moment identity");
}

void suite_corollary(Runner& r, const SuiteOptions& opt) {
  long K = pick(opt.k, 5), N = pick(opt.terms, 20);
  r.rep.params["k"] = std::to_string(K);
  r.rep.params["terms"] = std::to_string(N);
  const std::map<long, std::vector<std::string>> displayed = {
      {3, {"1/448", "3/8", "30", "720"}},
      {4, {"1/2304", "1/8", "21", "1680", "40320"}}};
  for (const auto& [k, want] : displayed) {
    for (long n = k, i = 0; n >= 0; --n, ++i) {
      Rational c = Rational(factorial(2 * k)) /
                   (rational_pow(Rational(4), n) * Rational(factorial(2 * n + 1)));
      r.check_rational(c, rational_from_string(want[static_cast<size_t>(i)]),
                       "moment formula coefficient k=" + std::to_string(k) +
                           " trace index " + std::to_string(k - n));
    }
  }
  EisensteinTable tab(2 * std::max(K, 1L), N);
  for (long k = 0; k <= K && r.ok; ++k) {
    QSeries<Rational> def = crank_moment_definition(2 * k, N);
    r.check_series(def, crank_moment_corollary(2 * k, tab),
                   "moment definition vs trace formula, k=" + std::to_string(k));
    r.check_series(def, crank_moment_lambert(2 * k, tab),
                   "moment definition vs Lambert formula, k=" + std::to_string(k));
  }
}

void suite_congruences(Runner& r, const SuiteOptions& opt) {
  long N = pick(opt.terms, 30);
  r.rep.params["terms"] = std::to_string(N);
  CrankTable table = CrankTable::from_genfun(N);
  std::vector<Integer> p = partition_counts(N);
  for (long n = 0; n <= N && r.ok; ++n) {
    Integer row_sum = 0;
    for (long m = -n; m <= n; ++m) {
      row_sum += table.count(m, n);
      r.check_integer(table.count(m, n), table.count(-m, n),
                      "count symmetry at (m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                          ")");
    }
    r.check_integer(row_sum, p[static_cast<size_t>(n)],
                    "counts sum to p(n) at n=" + std::to_string(n));
  }
  QSeries<Rational> m2 = table.moment_series(2);
  for (long n = 0; n <= N; ++n)
    r.check_rational(m2.coeff(n, 1), Rational(2 * n) * Rational(p[static_cast<size_t>(n)]),
                     "second moment vs 2n p(n) at n=" + std::to_string(n));
  struct Case {
    long mod, offset, jmax, cap;
  };
  for (const Case& c : {Case{5, 4, 40, -1}, Case{7, 5, 40, -1}, Case{11, 6, 40, 50}}) {
    if (!r.ok) return;
    long top = c.cap >= 0 ? c.cap : c.mod * c.jmax + c.offset;
    auto residues = crank_residue_tables(c.mod, top);
    std::vector<Integer> counts = partition_counts(top);
    for (long j = 0; j <= c.jmax; ++j) {
      long n = c.mod * j + c.offset;
      if (n > top) break;
      for (long res = 0; res < c.mod; ++res)
        r.check_integer(residues[static_cast<size_t>(n)][static_cast<size_t>(res)] *
                            Integer(c.mod),
                        counts[static_cast<size_t>(n)],
                        "crank residue class " + std::to_string(res) + " scaled by " +
                            std::to_string(c.mod) + " at n=" + std::to_string(n));
    }
  }
}

void suite_theorem1(Runner& r, const SuiteOptions& opt) {
  long K = pick(opt.k, 6), N = pick(opt.terms, 25);
  double radius = opt.radius < 0 ? 300.0 : opt.radius;
  std::vector<double> schedule =
      opt.schedule.empty() ? std::vector<double>{1.0, 0.5, 0.25, 0.125} : opt.schedule;
  r.rep.params["k"] = std::to_string(K);
  r.rep.params["terms"] = std::to_string(N);
  r.rep.params["radius"] = dstr(radius);
  r.check_true(theorem1_trace_check(K, N), "trace generating exponential k<=" + std::to_string(K),
               "coefficients match traces", "coefficients differ");
  const std::complex<double> I(0.0, 1.0);
  for (std::complex<double> tau : {I, 2.0 * I}) {
    for (long k : {1L, 2L}) {
      if (!r.ok) return;
      auto rep = theorem1_numeric_check(k, tau, schedule, radius);
      r.check_close(rep.lattice_value, rep.prediction, 1e-3,
                    "lattice limit vs quasimodular prediction, k=" + std::to_string(k) +
                        " tau=" + cstr(tau));
    }
  }
  for (long k : {1L, 3L}) {
    auto rep = theorem1_numeric_check(k, I, schedule, radius);
    r.check_close(rep.lattice_value, 0.0, 1e-3,
                  "odd-weight vanishing at the inversion fixed point, k=" + std::to_string(k));
  }
  for (long k : {1L, 2L, 3L}) {
    for (double s : {1.0, 0.5}) {
      LatticeParams p{I, 20.0, s};
      r.check_close(elementary_symmetric(k, p), elementary_symmetric_brute(k, p), 1e-10,
                    "Newton vs subset sum, k=" + std::to_string(k) + " s=" + dstr(s));
    }
  }
}

void suite_theta(Runner& r, const SuiteOptions& opt) {
  long zorder = pick(opt.zorder, 9), N = pick(opt.terms, 15);
  r.rep.params["zorder"] = std::to_string(zorder);
  r.rep.params["terms"] = std::to_string(N);
  BiSeries<Rational> prod = theta_product<Rational>(zorder, N);
  r.check_bi(prod, theta_exponential<Rational>(zorder, N), "theta product vs exponential");
  for (long t = 0; t < prod.hi(); t += 2)
    r.check_true(prod.row(t).is_zero(), "theta even row Z^" + std::to_string(t), "0", "nonzero");
  const long zo = 8, nq = 12;
  r.check_true(theta_shift_check<Rational>(TorsionPoint(Rational(0), Rational(1, 2)), zo, nq),
               "shift expansion at (0,1/2)", "sides agree", "sides differ");
  r.check_true(theta_shift_check<Cyclo>(TorsionPoint(Rational(0), Rational(1, 3)), zo, nq),
               "shift expansion at (0,1/3)", "sides agree", "sides differ");
  r.check_true(theta_shift_check<Cyclo>(TorsionPoint(Rational(0), Rational(1, 4)), zo, nq),
               "shift expansion at (0,1/4)", "sides agree", "sides differ");
  r.check_true(theta_shift_check<Cyclo>(TorsionPoint(Rational(1, 2), Rational(0)), zo, nq),
               "shift expansion at (1/2,0) on the half-integer grid", "sides agree",
               "sides differ");
  for (long k = 1; k <= 7; k += 2)
    r.check_true(
        torsional_G<Rational>(k, TorsionPoint(Rational(0), Rational(1, 2)), nq, 1).is_zero(),
        "odd expansion vanishing at (0,1/2), k=" + std::to_string(k), "0", "nonzero");
}

void check_divisor_reconstruct(Runner& r, const std::string& text, long zorder, long N) {
  Divisor d = Divisor::parse(text);
  std::string what = "divisor reconstruction for " + d.str();
  long m = d.conductor(), L = d.qgrid();
  if (m <= 2) {
    r.check_bi(theorem3_lhs<Rational>(d, zorder, N, L), theorem3_rhs<Rational>(d, zorder, N, L),
               what);
  } else if (m <= kMaxConductor) {
    r.check_bi(theorem3_lhs<Cyclo>(d, zorder, N, L), theorem3_rhs<Cyclo>(d, zorder, N, L), what);
  } else {
    using C = std::complex<double>;
    double gap = max_embed_difference(theorem3_lhs<C>(d, zorder, N, L),
                                      theorem3_rhs<C>(d, zorder, N, L));
    r.check_true(gap <= 1e-9, what + " (float ring, tol 1e-09)", dstr(gap), "<= 1e-09");
  }
}

void suite_theorem3(Runner& r, const SuiteOptions& opt) {
  long zorder = pick(opt.zorder, 8), N = pick(opt.terms, 12);
  r.rep.params["zorder"] = std::to_string(zorder);
  r.rep.params["terms"] = std::to_string(N);
  std::vector<std::string> divisors;
  if (!opt.divisor.empty()) {
    divisors.push_back(opt.divisor);
  } else {
    divisors = {"1@0,0", "2@0,0;-1@0,1/2;-1@0,1/2+0,-1",
                "1@0,1/2;1@0,1/2+0,-1;-1@0,1/3;-1@0,2/3+0,-1"};
  }
  r.rep.params["divisors"] = std::to_string(divisors.size());
  for (const std::string& text : divisors) {
    if (!r.ok) return;
    check_divisor_reconstruct(r, text, zorder, N);
  }
}

void suite_modularity(Runner& r, const SuiteOptions& opt) {
  long N = pick(opt.terms, 40);
  std::complex<double> tau = opt.tau;
  r.rep.params["terms"] = std::to_string(N);
  r.rep.params["tau"] = cstr(tau);
  struct Case {
    long k;
    Rational a, b;
  };
  for (const Case& c : {Case{2, Rational(0), Rational(1, 2)}, Case{1, Rational(0), Rational(1, 2)},
                        Case{3, Rational(0), Rational(1, 3)}}) {
    if (!r.ok) return;
    auto rep = modularity_spot_check(c.k, TorsionPoint(c.a, c.b), tau, N);
    r.check_close(rep.lhs, rep.rhs, 1e-6,
                  "inversion law k=" + std::to_string(c.k) + " at (" + rational_to_string(c.a) +
                      "," + rational_to_string(c.b) + ")");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "examples", "theorem1", "theorem2",    "corollary", "lemma41",   "lemma42",
      "polya",    "congruences", "theta",    "theorem3",  "modularity"};
  return names;
}

VerifyReport run_suite(const std::string& name, const SuiteOptions& opt) {
  Runner r;
  r.rep.suite = name;
  auto start = std::chrono::steady_clock::now();
  if (name == "examples") {
    suite_examples(r, opt);
  } else if (name == "theorem1") {
    suite_theorem1(r, opt);
  } else if (name == "theorem2") {
    suite_theorem2(r, opt);
  } else if (name == "corollary") {
    suite_corollary(r, opt);
  } else if (name == "lemma41") {
    suite_lemma41(r, opt);
  } else if (name == "lemma42") {
    suite_lemma42(r, opt);
  } else if (name == "polya") {
    suite_polya(r, opt);
  } else if (name == "congruences") {
    suite_congruences(r, opt);
  } else if (name == "theta") {
    suite_theta(r, opt);
  } else if (name == "theorem3") {
    suite_theorem3(r, opt);
  } else if (name == "modularity") {
    suite_modularity(r, opt);
  } else {
    throw std::invalid_argument("unknown verification suite '" + name + "'");
  }
  auto stop = std::chrono::steady_clock::now();
  r.rep.pass = r.ok;
  r.rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r.rep;
}

std::vector<VerifyReport> run_all_suites(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace eistrace
