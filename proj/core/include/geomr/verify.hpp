#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geomr/tropical.hpp"

namespace geomr {

struct VerifyConfig {
  int n = 4;
  std::uint64_t seed = 42;
  int trials = 100;
  // k-values of the tensor factors; empty means the suite's default.
  std::vector<int> profile;
  // Column bound for the exhaustive combinatorial suites.
  int max_L = 2;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  long trials = 0;
  long failures = 0;
  // At most a handful of failing inputs, rendered for humans.
  std::vector<std::string> counterexamples;
  bool passed() const { return trials > 0 && failures == 0; }
  void record(bool ok, const std::string& dump = {});
};

struct Report {
  std::string suite;
  VerifyConfig config;
  std::vector<CheckResult> checks;
  bool passed() const;
};

const std::vector<std::string>& verify_suite_names();
// Throws InvalidInput for an unknown suite or a profile the suite cannot use.
Report run_suite(const std::string& suite, const VerifyConfig& cfg);

std::string describe(const XPoint<Rational>& x);
std::string describe(const XProduct<Rational>& xs);
std::string describe(const Tableau& T);

}  // namespace geomr
