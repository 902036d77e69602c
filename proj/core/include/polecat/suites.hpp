#pragma once

// Verification suites.  Each suite is a list of named checks; randomized
// checks draw every case from its own stream keyed by (seed, check, case),
// so reports do not depend on scheduling.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polecat {

struct Check {
  std::string name;
  std::string anchor;  // the identity being checked
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

struct SuiteOptions {
  int cutoff = 4;
  std::uint64_t seed = 0;
  int trials = 100;
  /// Worker threads for independent cases; 0 picks the hardware count.
  int threads = 0;
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite name.
Report run_suite(std::string_view name, const SuiteOptions& options);

Report suite_tl_axioms(const SuiteOptions& options);
Report suite_hopf_axioms(const SuiteOptions& options);
Report suite_intertwine(const SuiteOptions& options);
Report suite_kernel(const SuiteOptions& options);
Report suite_presentation(const SuiteOptions& options);
Report suite_uq(const SuiteOptions& options);
Report suite_confluence(const SuiteOptions& options);

}  // namespace polecat
