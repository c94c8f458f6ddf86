#pragma once

// The invariant suite behind `dwigner verify`: every library identity,
// measured at one even N with seeded random inputs.

#include <cstdint>
#include <string>
#include <vector>

namespace dwigner::verify {

struct CheckResult {
  std::string name;
  double measured;
  double threshold;
  bool lower_bound;  // true: pass iff measured > threshold; false: measured <= threshold
  bool pass;
};

/// Runs the suite at N ∈ {2, 4, 6, 8}. Tolerances are multiplied by
/// tolerance_scale. Results are deterministic for fixed (n, seed, scale).
std::vector<CheckResult> run_suite(int n, std::uint64_t seed, double tolerance_scale = 1.0);

}  // namespace dwigner::verify
