#pragma once

#include <string>
#include <vector>

#include "widthone/bigint.hpp"

namespace widthone {

// Cross-validation suites behind the `verify` CLI subcommand. Each check
// stops at the first mismatch and reports the minimal failing instance.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // failing instance, or a short summary when passed
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Runs, over d <= d_max and n <= n_max (enumeration-backed checks clamped
// to their feasibility guards):
//   * formula equivalence: rsk == stanley == 4F3 form == series convolution,
//     square and rectangular;
//   * known 5x5 tables for d <= min(d_max, 8) when n_max >= 5;
//   * enumeration: oracle sum matrix, counting law, biword round-trip,
//     northwest-corner bijection (skipped when with_oracle is false);
//   * h-polynomials: shelling accumulation == closed form, f/h transform
//     round-trip through the generic complex, corner-set cross-check.
VerifyReport run_verify(long d_max, int n_max, bool with_oracle = true);

}  // namespace widthone
