#pragma once

// Closed-form point-thickness of complete multipartite graphs
// K_{1^k1, 2^k2, 3^k3, p_1, ..., p_n} with 4 <= p_1 <= ... <= p_n.

#include <optional>
#include <string_view>
#include <utility>

#include "ptk/core.hpp"

namespace ptk {

enum class Branch {
  EmptyGraph,
  CaseA,       // p0 <= 2n
  CaseBPart1,  // p0 > 2n, k1 + k3 >= 2n
  CaseBPart2,  // p0 > 2n, k1 + k3 < 2n
};

std::string_view to_string(Branch b);

/// Finer classification of a profile by the shape of its construction.
/// Part I shapes use r1 = k1 + k3 - 2n singles and r2 = k2 + k3 pairs left
/// after every big part has received two singles.
enum class Subcase {
  Empty,
  Distribute,        // p0 <= 2n
  SinglesExact,      // r1 >= 3 r2, (r1 - 3 r2) % 4 == 0
  SinglesRemainder,  // r1 >= 3 r2, (r1 - 3 r2) % 4 != 0
  MixedRemainder,    // r1 < 3 r2, leftovers (g1, g2) neither (0,0) nor (2,2)
  MixedSplit,        // r1 < 3 r2, leftovers (2, 2)
  MixedExact,        // r1 < 3 r2, leftovers (0, 0)
  PairsRemainder,    // Part II with eps + gamma > 0
  PairsExact,        // Part II with eps = gamma = 0
};

std::string_view to_string(Subcase s);

struct CaseTrace {
  Branch branch = Branch::EmptyGraph;
  /// Maximizing j of case (a); zero elsewhere.
  Count t = 0;
  /// (k1 + k3) mod 2 in Part II; zero elsewhere.
  Count epsilon = 0;
  /// Arguments passed to N in case (b).
  std::pair<Count, Count> n_args{0, 0};
  /// Set iff N took its floor-based branch.
  std::optional<int> sigma_used;

  friend bool operator==(const CaseTrace&, const CaseTrace&) = default;
};

struct ThicknessResult {
  Count value = 0;
  CaseTrace trace;
};

/// Correction term for N: 0 if k1 = 0 and residual = 0 (mod 3), 2 if both are
/// 2 (mod 3), otherwise 1.  `k2_residual` is k2 - floor(k1 / 3).  Throws
/// DomainError on negative input.
int sigma(Count k1, Count k2_residual);

/// Point-thickness of K_{1^k1, 2^k2}.  Throws DomainError on negative input
/// or input above 2^62.
Count n_value(Count k1, Count k2);

struct CaseAValue {
  Count value = 0;
  Count t = 0;
};

/// Requires p0 <= 2n and a nonempty profile; throws CaseError otherwise.
CaseAValue case_a_value(const Decomposition& d);

/// Requires p0 > 2n; throws CaseError otherwise.
ThicknessResult case_b_value(const Decomposition& d);

ThicknessResult point_thickness(const PartProfile& profile);

/// Same value computed from counts alone, without materializing the parts.
ThicknessResult point_thickness(const Decomposition& d);

Subcase classify_subcase(const Decomposition& d);

}  // namespace ptk
