#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eistrace {

// Parameter overrides for a verification suite; negative numbers and empty
// strings mean "use the suite's pinned default".
struct SuiteOptions {
  long terms = -1;
  long k = -1;
  long zorder = -1;
  std::string divisor;
  std::complex<double> tau{0.0, 2.0};
  double radius = -1.0;
  std::vector<double> schedule;
  unsigned long seed = 0xE15E;
};

struct Discrepancy {
  std::string location;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string suite;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::optional<Discrepancy> first_discrepancy;
  double wall_ms = 0.0;
};

// Fixed execution order of the verification suites.
const std::vector<std::string>& suite_names();

// Runs one named suite; "all" is not a suite here (the CLI aggregates it).
VerifyReport run_suite(const std::string& name, const SuiteOptions& opt = {});

std::vector<VerifyReport> run_all_suites(const SuiteOptions& opt = {});

}  // namespace eistrace
