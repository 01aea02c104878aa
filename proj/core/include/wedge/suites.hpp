#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wedge::suites {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Knobs with the acceptance-suite defaults baked in. The counts are pinned
/// here, not in the test files, so the CLI `verify` command and the
/// acceptance binary run the identical checks.
struct SuiteConfig {
  uint64_t seed = 0x5EEDBEEF;
  std::vector<uint32_t> primes = {0, 3, 5};
  uint32_t witness_prime = 3;

  uint32_t identity_assignments = 100;   // per law and characteristic
  uint32_t structure_samples = 200;      // g^3 = 0 sample count
  uint32_t structure_assignments = 100;  // other grading laws
  uint32_t pair_sum_max_blocks = 4;

  uint32_t normalization_polys = 500;
  uint32_t normalization_assignments = 100;  // split across G0(6) and G(6)

  uint32_t family_max_n = 4;
  uint32_t witness_random_checks = 50;
  uint32_t unital_family_max_n = 3;
  uint32_t unital_max_entry = 4;

  uint32_t span_nonunitary_max_degree = 6;
  uint32_t span_nonunitary_max_vars = 4;
  uint32_t span_unitary_max_degree = 5;
  uint32_t span_unitary_max_vars = 3;
};

// The numbered acceptance criteria.
CheckResult commutator_identity_laws(const SuiteConfig& cfg);   // 1
CheckResult grading_structure_laws(const SuiteConfig& cfg);     // 2
CheckResult pair_sum_powers(const SuiteConfig& cfg);            // 3
CheckResult normalization_soundness(const SuiteConfig& cfg);    // 4
CheckResult separating_witnesses(const SuiteConfig& cfg);       // 5
CheckResult unital_witnesses(const SuiteConfig& cfg);           // 6
CheckResult generator_verdicts(const SuiteConfig& cfg);         // 7
CheckResult span_equalities(const SuiteConfig& cfg);            // 8
CheckResult term_order_laws(const SuiteConfig& cfg);            // 9

/// Named groups for the CLI: "lemmas" (1-3), "normalization" (4),
/// "witnesses" (5, 6, 9), "theorems" (7, 8), "all".
std::vector<CheckResult> run_group(const std::string& group, const SuiteConfig& cfg);

}  // namespace wedge::suites
