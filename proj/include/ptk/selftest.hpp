#pragma once

// Cross-check suites shared by `ptk selftest` and the acceptance binary.
// Each suite compares two independent routes and records reproducers for
// the first few disagreements.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ptk/core.hpp"
#include "ptk/formula.hpp"

namespace ptk {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool skipped = false;
  std::string note;
  /// First kMaxRecorded failures, each naming a reproducer profile string.
  std::vector<std::string> failures;

  static constexpr std::size_t kMaxRecorded = 10;

  bool ok() const noexcept { return failed == 0; }
  void fail(std::string what);
};

using Rng = std::mt19937_64;

/// Random profile with at most 9 parts whose subcase is `target`.  Big
/// parts are drawn from [4, max_big], half the time from [4, 8] so that
/// case (a) also sees t > 0.  `target` must not be Subcase::Empty.
PartProfile random_profile(Rng& rng, Subcase target, Count max_big = 1'000'000);

/// Exact oracle against the formula for every profile with 1..max_total
/// vertices.  max_total <= 0 skips the suite.
SuiteResult check_oracle_vs_formula(Count max_total);

/// Same comparison restricted to p0 in {2n - 1, 2n, 2n + 1}.
SuiteResult check_boundary(Count max_total);

/// Closed-form classifier against the Kuratowski oracle for every profile
/// with 0..max_total vertices.
SuiteResult check_classifier(Count max_total);

/// All-ones profile of length n against ceil(n / 4), n = 1..max_n.
SuiteResult check_complete_graphs(Count max_n);

/// Witness construction + verification on `count` stratified profiles.
SuiteResult check_witnesses(std::size_t count, std::uint64_t seed);

/// p0 > 2n: incrementing any single big part keeps the value.
SuiteResult check_big_part_invariance(std::size_t count, std::uint64_t seed);

/// p0 <= 2n: value is n - t with t found by exhaustive scan, and adding a
/// size-4 part never lowers the value.
SuiteResult check_case_a(std::size_t count, std::uint64_t seed);

/// Appending a part or growing a part never lowers the value.
SuiteResult check_monotonicity(std::size_t count, std::uint64_t seed);

void print_suite(std::ostream& os, const SuiteResult& r);

}  // namespace ptk
