#pragma once

// Explicit partitions attaining the closed-form point-thickness, and a
// checker for arbitrary partitions.

#include <cstddef>
#include <string>
#include <vector>

#include "ptk/core.hpp"

namespace ptk {

/// Unattached singles and non-adjacent pairs harvested from the parts of
/// size 1, 2 and 3.  Entries are part indices of `d.reassemble()`, in
/// ascending order.  A size-3 part is split 1 + 2 and so appears in both.
struct PoolState {
  std::vector<std::size_t> singles;  // size-1 parts, then size-3 parts
  std::vector<std::size_t> pairs;    // size-2 parts, then size-3 parts
  std::size_t next_single = 0;
  std::size_t next_pair = 0;

  static PoolState from(const Decomposition& d);

  std::size_t singles_left() const { return singles.size() - next_single; }
  std::size_t pairs_left() const { return pairs.size() - next_pair; }
  std::size_t take_single();
  std::size_t take_pair();
};

/// Dispatches on the formula's branch.  The class count equals
/// point_thickness(profile).value; every class is classifier-planar.
Partition construct_partition(const PartProfile& profile);

/// p0 <= 2n: one class per big part beyond the first t, the pooled vertices
/// spread at most two per class.  Pairs go first, then singles.
Partition construct_case_a(const Decomposition& d, Count t);

/// p0 > 2n and k1 + k3 >= 2n.
Partition construct_case_b_part1(const Decomposition& d);

/// p0 > 2n and k1 + k3 < 2n.
Partition construct_case_b_part2(const Decomposition& d);

struct VerifyReport {
  bool cover = false;
  std::vector<bool> class_planarity;
  std::size_t count = 0;
  Count formula_value = 0;
  bool pass = false;
  /// Human-readable description of every failed check.
  std::vector<std::string> problems;
};

/// Never throws on malformed partitions; mismatches land in `problems`.
VerifyReport verify_partition(const PartProfile& profile,
                              const Partition& partition);

}  // namespace ptk
