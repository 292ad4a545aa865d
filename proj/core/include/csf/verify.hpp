#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csf {

// Bounds for a verification suite; -1 keeps the suite's default (which
// matches the widest range the identity is certified for).
struct SuiteOptions {
  int max_weight = -1;
  int max_degree = -1;
  int max_n = -1;
  int instances = -1;   // randomized suites
  long M = -1;          // numeric suites
  std::uint64_t seed = 0x5eed5eedULL;
};

struct SuiteReport {
  std::string suite;
  long cases = 0;
  long failures = 0;
  std::string first_counterexample;  // empty when everything passed

  bool ok() const { return failures == 0 && cases > 0; }
};

// Named verification suites exposed by the CLI (`verify <name>`).
// Throws UnknownSuite for anything not in suite_names().
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

const std::vector<std::string>& suite_names();

// Closed-form fast paths vs the tensor-path evaluation for rho and rho_bar
// (not a CLI suite; exercised by tests and the acceptance runner).
SuiteReport tensor_equivalence_suite(int max_degree, int max_n);

}  // namespace csf
