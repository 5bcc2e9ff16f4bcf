#ifndef POWMAT_SELFTEST_HPP
#define POWMAT_SELFTEST_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "powmat/poly.hpp"

namespace powmat {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first failing input, empty on success
  bool informational = false;  // reported but never fails the run
};

struct SelftestReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_text() const;
};

struct SelftestOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 20240531;
  /// Corrupts one side of the homomorphism check; used as a negative control.
  bool inject_fault = false;
};

/// Runs the oracle-backed property checks of every module on one field.
SelftestReport run_selftest(const Field& field, const SelftestOptions& options);

ReducedPoly random_poly(const Field& field, std::mt19937_64& rng);
/// Interpolates a uniformly random bijection of F_q.
ReducedPoly random_permutation_poly(const Field& field, std::mt19937_64& rng);

}  // namespace powmat

#endif  // POWMAT_SELFTEST_HPP
