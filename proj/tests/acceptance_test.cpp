// Acceptance suite: every criterion runs at its pinned parameters with exact
// arithmetic and prints one PASS/FAIL line. Nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <vector>

#include "wedge/suites.hpp"

int main() {
  using namespace wedge::suites;
  SuiteConfig cfg;  // the acceptance parameters are the defaults

  struct Criterion {
    const char* label;
    CheckResult (*run)(const SuiteConfig&);
  };
  const std::vector<Criterion> criteria = {
      {"1 commutator identity laws", commutator_identity_laws},
      {"2 Grassmann grading laws", grading_structure_laws},
      {"3 pair-sum power laws", pair_sum_powers},
      {"4 normalization soundness", normalization_soundness},
      {"5 separating witnesses (nonunitary)", separating_witnesses},
      {"6 separating witnesses (unital)", unital_witnesses},
      {"7 generator verdicts", generator_verdicts},
      {"8 per-type span equalities", span_equalities},
      {"9 term order laws", term_order_laws},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = c.run(cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%s  criterion %s  (%lld ms)  [%s]\n", r.pass ? "PASS" : "FAIL", c.label,
                static_cast<long long>(ms), r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
