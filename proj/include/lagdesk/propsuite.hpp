#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace lagdesk {

struct PropSizes {
  long trials = 24;
  size_t max_half_dim = 2;
  size_t circle_size = 10;
};

struct PropOptions {
  // Negative-test hook: flips the sign of the inertia term the coboundary
  // suite compares against; a correct engine must then fail that suite.
  bool corrupt_tau_sign = false;
};

struct SuiteResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  std::vector<std::string> counterexamples;  // first few, for diagnosis
};

// Deterministic randomized invariant checks across all modules: identical
// seed and sizes give identical results and identical rendered reports.
struct PropReport {
  uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool all_pass() const;
  std::string render_machine() const;
  std::string render_table() const;
};

PropReport run_property_suites(uint64_t seed, const PropSizes& sizes = {},
                               const PropOptions& opt = {});

}  // namespace lagdesk
