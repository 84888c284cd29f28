#include "eistrace/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "eistrace/crank.hpp"
#include "eistrace/jacobi.hpp"
#include "eistrace/json_io.hpp"
#include "eistrace/lattice.hpp"
#include "eistrace/verify.hpp"

namespace eistrace {

namespace {

std::complex<double> parse_tau(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("tau must be 're,im', got '" + s + "'");
  size_t p1 = 0, p2 = 0;
  double re = std::stod(s.substr(0, comma), &p1);
  double im = std::stod(s.substr(comma + 1), &p2);
  if (p1 != comma || p2 != s.size() - comma - 1)
    throw std::invalid_argument("tau must be 're,im', got '" + s + "'");
  return {re, im};
}

std::vector<double> parse_schedule(const std::string& s) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string piece = s.substr(start, comma == std::string::npos ? comma : comma - start);
    size_t pos = 0;
    double v = std::stod(piece, &pos);
    if (pos != piece.size()) throw std::invalid_argument("bad schedule entry '" + piece + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty extrapolation schedule");
  return out;
}

std::string qexp_str(long e, long L) {
  if (L == 1) return "q^" + std::to_string(e);
  return "q^(" + std::to_string(e) + "/" + std::to_string(L) + ")";
}

template <class T>
void print_qseries(std::ostream& out, const QSeries<T>& s, const std::string& indent) {
  out << indent << "grid 1/" << s.denom() << ", complete below " << qexp_str(s.trunc(), s.denom())
      << "\n";
  if (s.is_zero()) {
    out << indent << "0\n";
    return;
  }
  for (const auto& [e, v] : s.coeffs())
    out << indent << qexp_str(e, s.denom()) << ": " << ring_traits<T>::display(v) << "\n";
}

template <class T>
void print_biseries(std::ostream& out, const BiSeries<T>& s) {
  for (long t = s.lo(); t < s.hi(); ++t) {
    out << s.var() << "^" << t << ":\n";
    print_qseries(out, s.row(t), "  ");
  }
}

nlohmann::json complex_json(std::complex<double> z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json report_json(const VerifyReport& rep, bool timings) {
  nlohmann::json j{{"suite", rep.suite}, {"pass", rep.pass}, {"params", rep.params}};
  if (rep.first_discrepancy) {
    j["first_discrepancy"] = {{"location", rep.first_discrepancy->location},
                              {"lhs", rep.first_discrepancy->lhs},
                              {"rhs", rep.first_discrepancy->rhs}};
  }
  if (timings) j["wall_ms"] = rep.wall_ms;
  return j;
}

void print_report_text(std::ostream& out, const VerifyReport& rep, bool timings) {
  out << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL");
  for (const auto& [k, v] : rep.params) out << " " << k << "=" << v;
  if (timings) out << " wall_ms=" << rep.wall_ms;
  out << "\n";
  if (rep.first_discrepancy) {
    out << "  at:  " << rep.first_discrepancy->location << "\n";
    out << "  lhs: " << rep.first_discrepancy->lhs << "\n";
    out << "  rhs: " << rep.first_discrepancy->rhs << "\n";
  }
}

template <class T>
BiSeries<T> divisor_expansion(const Divisor& d, long zorder, long N, long L) {
  BiSeries<T> lhs = theorem3_lhs<T>(d, zorder, N, L);
  long a0 = d.origin_mult();
  BiSeries<T> out("Z", a0, std::max(zorder + 1, a0), L, N * L + 1);
  for (long t = a0; t <= zorder; ++t) out.set_row(t, lhs.row(t));
  return out;
}

struct CliState {
  std::string format = "json";
  bool timings = false;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return format == "json"; }
  void emit(const nlohmann::json& j) { out << j.dump(2) << "\n"; }
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series toolkit for partition Eisenstein traces, crank moments,\n"
               "theta quotients, and their verification suites."};
  app.require_subcommand(1);
  CliState st{"json", false, out, err};
  app.add_option("--format", st.format, "Output format")
      ->transform(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  long weight = 4, k = 0, terms = -1, zorder = -1;
  std::string phi = "lambda", method = "definition", divisor_text, suite;
  std::string tau_text = "0,2", schedule_text = "1,0.5,0.25,0.125";
  double radius = -1.0;
  unsigned long seed = 0xE15E;

  CLI::App* eis = app.add_subcommand("eis", "Eisenstein q-expansion of a given even weight");
  eis->add_option("--weight", weight, "Even weight >= 2")->required();
  eis->add_option("--terms", terms, "Expansion complete through q^N");

  CLI::App* trace = app.add_subcommand("trace", "Weighted trace over partitions of k");
  trace->add_option("--k", k, "Partition size")->required();
  trace->add_option("--phi", phi, "Partition weight")
      ->transform(CLI::IsMember({"lambda", "crank", "jacobi"}));
  trace->add_option("--terms", terms, "Expansion complete through q^N");

  CLI::App* crank = app.add_subcommand("crank-moments", "2k-th crank moment series");
  crank->add_option("--k", k, "Half moment order")->required();
  crank->add_option("--method", method, "Computation route")
      ->transform(CLI::IsMember({"definition", "corollary", "lambert"}));
  crank->add_option("--terms", terms, "Expansion complete through q^N");

  CLI::App* lattice = app.add_subcommand("lattice", "Regularized lattice symmetric function");
  lattice->add_option("--k", k, "Symmetric function index")->required();
  lattice->add_option("--tau", tau_text, "Lattice parameter re,im")->capture_default_str();
  lattice->add_option("--radius", radius, "Ball cutoff");
  lattice->add_option("--s", schedule_text, "Damping schedule, halving")->capture_default_str();
  lattice->add_option("--terms", terms, "q-expansion terms for the prediction");

  CLI::App* jacobi = app.add_subcommand("jacobi", "Z-expansion of a theta quotient");
  jacobi->add_option("--divisor", divisor_text, "mult@alpha,beta[+la,lb];...")->required();
  jacobi->add_option("--zorder", zorder, "Expansion complete through Z^T");
  jacobi->add_option("--terms", terms, "Expansion complete through q^N");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->transform(CLI::IsMember(suite_choices));
  verify->add_option("--terms", terms, "Override q-truncation");
  verify->add_option("--k", k, "Override top index");
  verify->add_option("--zorder", zorder, "Override outer truncation");
  verify->add_option("--divisor", divisor_text, "Override the divisor under test");
  verify->add_option("--tau", tau_text, "Override tau as re,im");
  verify->add_option("--radius", radius, "Override lattice cutoff");
  verify->add_option("--s", schedule_text, "Override damping schedule");
  verify->add_option("--seed", seed, "Random specialization seed");
  verify->add_flag("--timings", st.timings, "Include wall-clock times in reports");

  CLI::App* dump = app.add_subcommand("dump-partitions", "Partitions of k with their weights");
  dump->add_option("--k", k, "Partition size")->required();

  for (CLI::App* sc : {eis, trace, crank, lattice, jacobi, verify, dump}) sc->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (eis->parsed()) {
      long N = terms < 0 ? 30 : terms;
      QSeries<Rational> s = eisenstein_G(weight, N);
      if (st.json())
        st.emit(to_json(s));
      else
        print_qseries(out, s, "");
    } else if (trace->parsed()) {
      long N = terms < 0 ? 30 : terms;
      EisensteinTable tab(2 * std::max(k, 1L), N);
      QSeries<Rational> s = tab.trace(k, partition_weight(phi));
      if (st.json())
        st.emit(to_json(s));
      else
        print_qseries(out, s, "");
    } else if (crank->parsed()) {
      long N = terms < 0 ? 30 : terms;
      QSeries<Rational> s = [&] {
        if (method == "definition") return crank_moment_definition(2 * k, N);
        EisensteinTable tab(2 * std::max(k, 1L), N);
        return method == "corollary" ? crank_moment_corollary(2 * k, tab)
                                     : crank_moment_lambert(2 * k, tab);
      }();
      if (st.json())
        st.emit(to_json(s));
      else
        print_qseries(out, s, "");
    } else if (lattice->parsed()) {
      auto rep = theorem1_numeric_check(k, parse_tau(tau_text), parse_schedule(schedule_text),
                                        radius < 0 ? 300.0 : radius, terms < 0 ? 40 : terms);
      if (st.json()) {
        st.emit(nlohmann::json{{"k", rep.k},
                               {"tau", complex_json(rep.tau)},
                               {"radius", rep.radius},
                               {"schedule", rep.schedule},
                               {"lattice_value", complex_json(rep.lattice_value)},
                               {"prediction", complex_json(rep.prediction)},
                               {"abs_error", rep.abs_error}});
      } else {
        out << "k " << rep.k << ", radius " << rep.radius << "\n";
        out << "lattice value  (" << rep.lattice_value.real() << "," << rep.lattice_value.imag()
            << ")\n";
        out << "prediction     (" << rep.prediction.real() << "," << rep.prediction.imag()
            << ")\n";
        out << "abs error      " << rep.abs_error << "\n";
      }
    } else if (jacobi->parsed()) {
      long T = zorder < 0 ? 8 : zorder, N = terms < 0 ? 12 : terms;
      Divisor d = Divisor::parse(divisor_text);
      long m = d.conductor(), L = d.qgrid();
      if (m <= 2) {
        BiSeries<Rational> s = divisor_expansion<Rational>(d, T, N, L);
        if (st.json())
          st.emit(nlohmann::json{{"divisor", d.str()}, {"expansion", to_json(s)}});
        else
          print_biseries(out, s);
      } else if (m <= kMaxConductor) {
        BiSeries<Cyclo> s = divisor_expansion<Cyclo>(d, T, N, L);
        if (st.json())
          st.emit(nlohmann::json{{"divisor", d.str()}, {"expansion", to_json(s)}});
        else
          print_biseries(out, s);
      } else {
        throw std::invalid_argument("root-of-unity order " + std::to_string(m) +
                                    " exceeds the exact-ring bound " +
                                    std::to_string(kMaxConductor));
      }
    } else if (verify->parsed()) {
      SuiteOptions opt;
      opt.terms = terms;
      opt.k = verify->count("--k") ? k : -1;
      opt.zorder = zorder;
      opt.divisor = divisor_text;
      opt.tau = parse_tau(tau_text);
      opt.radius = radius;
      opt.seed = seed;
      if (verify->count("--s")) opt.schedule = parse_schedule(schedule_text);
      bool pass = true;
      if (suite == "all") {
        std::vector<VerifyReport> reps = run_all_suites(opt);
        for (const VerifyReport& rep : reps) pass = pass && rep.pass;
        if (st.json()) {
          nlohmann::json suites = nlohmann::json::array();
          for (const VerifyReport& rep : reps) suites.push_back(report_json(rep, st.timings));
          st.emit(nlohmann::json{{"pass", pass}, {"suites", std::move(suites)}});
        } else {
          for (const VerifyReport& rep : reps) print_report_text(out, rep, st.timings);
          out << (pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
        }
      } else {
        VerifyReport rep = run_suite(suite, opt);
        pass = rep.pass;
        if (st.json())
          st.emit(report_json(rep, st.timings));
        else
          print_report_text(out, rep, st.timings);
      }
      return pass ? 0 : 1;
    } else if (dump->parsed()) {
      nlohmann::json list = nlohmann::json::array();
      for (const Partition& lam : partitions_of(k)) {
        nlohmann::json entry{{"parts", lam.parts()},
                             {"multiplicities", lam.mult()},
                             {"z", rational_to_string(z_lambda(lam))},
                             {"phi_lambda", rational_to_string(phi_lambda(lam))},
                             {"phi_crank", rational_to_string(phi_crank(lam))},
                             {"phi_jacobi", rational_to_string(phi_jacobi(lam))}};
        if (lam.size() > 0) entry["crank"] = crank_statistic(lam);
        list.push_back(std::move(entry));
        if (!st.json()) {
          const nlohmann::json& e = list.back();
          out << lam.str() << "  z=" << e["z"].get<std::string>()
              << "  phi_lambda=" << e["phi_lambda"].get<std::string>()
              << "  phi_crank=" << e["phi_crank"].get<std::string>()
              << "  phi_jacobi=" << e["phi_jacobi"].get<std::string>();
          if (e.contains("crank")) out << "  crank=" << e["crank"].get<long>();
          out << "\n";
        }
      }
      if (st.json()) st.emit(list);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace eistrace
