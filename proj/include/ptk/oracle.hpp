#pragma once

// Exact point-thickness by exhaustive search over class compositions.
//
// A vertex subset of a complete multipartite graph is determined up to
// isomorphism by its per-part counts, and what is left after removing a
// class is again complete multipartite.  The search therefore runs over
// count vectors rather than labelled vertices, and memoizes on the sorted
// multiset of nonzero remaining counts.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ptk/core.hpp"

namespace ptk {

inline constexpr Count kOracleDefaultMax = 12;
inline constexpr Count kOracleHardMax = 16;

struct ExactResult {
  Count value = 0;
  Partition witness;
};

/// Throws SizeError if profile.total() > max_total or max_total > 16.
ExactResult exact_point_thickness(const PartProfile& profile,
                                  Count max_total = kOracleDefaultMax);

/// Inclusion-maximal compositions c (0 <= c[i] <= remaining[i], not all
/// zero) whose induced graph is planar.  Planarity is hereditary, so any
/// partition can be rewritten to use only maximal classes without growing.
/// Output is sorted descending by lexicographic order.
std::vector<ClassComposition> enumerate_planar_compositions(
    std::span<const Count> remaining);

/// ceil(total / cap) with cap the largest planar class available from
/// `remaining`.  Never exceeds the true minimum for `remaining`.
Count lower_bound(std::span<const Count> remaining);

struct SearchStats {
  std::size_t states = 0;
  std::size_t pruned = 0;
  std::size_t memo_hits = 0;
};

/// Reusable solver; keeps its memo table across calls.
class ExactSolver {
 public:
  explicit ExactSolver(std::size_t memo_limit = std::size_t{1} << 22)
      : memo_limit_(memo_limit) {}

  ExactResult solve(const PartProfile& profile,
                    Count max_total = kOracleDefaultMax);

  const SearchStats& stats() const noexcept { return stats_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  using Key = std::vector<Count>;

  Count minimum(const std::vector<Count>& remaining);

  std::size_t memo_limit_;
  std::map<Key, Count> memo_;
  SearchStats stats_;
};

}  // namespace ptk
