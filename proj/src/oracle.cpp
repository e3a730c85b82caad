#include "ptk/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "ptk/planarity.hpp"

namespace ptk {

namespace {

bool planar_counts(std::span<const Count> counts) {
  std::vector<Count> nonzero;
  for (Count c : counts) {
    if (c > 0) nonzero.push_back(c);
  }
  return classify_planar(PartProfile(std::move(nonzero)));
}

std::vector<Count> canonical(std::span<const Count> remaining) {
  std::vector<Count> key;
  for (Count c : remaining) {
    if (c > 0) key.push_back(c);
  }
  std::sort(key.begin(), key.end());
  return key;
}

// Order in which the search tries classes: larger classes first, ties by
// descending lexicographic order of the counts.
bool try_before(const ClassComposition& a, const ClassComposition& b) {
  const Count ta = a.total();
  const Count tb = b.total();
  if (ta != tb) return ta > tb;
  return b < a;
}

// Index of the vertex every candidate class must contain: one from the
// part with the most remaining vertices (last such part on ties).
std::size_t anchor_part(std::span<const Count> remaining) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] >= remaining[best]) best = i;
  }
  return best;
}

std::vector<ClassComposition> anchored_candidates(
    std::span<const Count> remaining) {
  const std::size_t anchor = anchor_part(remaining);
  std::vector<ClassComposition> out;
  for (auto& c : enumerate_planar_compositions(remaining)) {
    if (c[anchor] > 0) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), try_before);
  return out;
}

std::vector<Count> minus(std::span<const Count> remaining,
                         const ClassComposition& c) {
  std::vector<Count> out(remaining.begin(), remaining.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c[i];
  return out;
}

}  // namespace

std::vector<ClassComposition> enumerate_planar_compositions(
    std::span<const Count> remaining) {
  std::vector<std::vector<Count>> planar;
  std::vector<Count> current(remaining.size(), 0);
  // Planarity is hereditary, so a non-planar prefix cannot be extended.
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == remaining.size()) {
      if (std::any_of(current.begin(), current.end(),
                      [](Count c) { return c > 0; })) {
        planar.push_back(current);
      }
      return;
    }
    for (Count k = 0; k <= remaining[i]; ++k) {
      current[i] = k;
      if (k == 0 || planar_counts(std::span(current).first(i + 1))) {
        self(self, i + 1);
      } else {
        break;
      }
    }
    current[i] = 0;
  };
  rec(rec, 0);

  std::vector<ClassComposition> out;
  for (auto& c : planar) {
    bool maximal = true;
    for (std::size_t i = 0; i < c.size() && maximal; ++i) {
      if (c[i] == remaining[i]) continue;
      ++c[i];
      maximal = !planar_counts(c);
      --c[i];
    }
    if (maximal) out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return b < a; });
  return out;
}

Count lower_bound(std::span<const Count> remaining) {
  Count total = 0;
  for (Count c : remaining) total += c;
  if (total == 0) return 0;
  Count cap = 0;
  for (const auto& c : enumerate_planar_compositions(remaining)) {
    cap = std::max(cap, c.total());
  }
  return (total + cap - 1) / cap;
}

Count ExactSolver::minimum(const std::vector<Count>& remaining) {
  if (remaining.empty()) return 0;
  if (const auto it = memo_.find(remaining); it != memo_.end()) {
    ++stats_.memo_hits;
    return it->second;
  }
  ++stats_.states;
  // Every part as its own edgeless class is always feasible.
  Count best = static_cast<Count>(remaining.size());
  for (const auto& c : anchored_candidates(remaining)) {
    const std::vector<Count> rest = canonical(minus(remaining, c));
    if (1 + lower_bound(rest) >= best) {
      ++stats_.pruned;
      continue;
    }
    best = std::min(best, 1 + minimum(rest));
  }
  if (lower_bound(remaining) > best) {
    throw InternalError("oracle lower bound exceeds the exact minimum");
  }
  if (memo_.size() < memo_limit_) memo_.emplace(remaining, best);
  return best;
}

ExactResult ExactSolver::solve(const PartProfile& profile, Count max_total) {
  if (max_total > kOracleHardMax) {
    std::ostringstream os;
    os << "oracle limit " << max_total << " exceeds the hard cap of "
       << kOracleHardMax;
    throw SizeError(os.str());
  }
  if (profile.total() > max_total) {
    std::ostringstream os;
    os << "profile " << to_string(profile) << " has " << profile.total()
       << " vertices, oracle limit is " << max_total;
    throw SizeError(os.str());
  }
  ExactResult r;
  std::vector<Count> remaining(profile.parts().begin(), profile.parts().end());
  r.value = minimum(canonical(remaining));

  // Walk the same candidate order and keep the first class that stays on
  // an optimal path.
  Count target = r.value;
  while (target > 0) {
    bool advanced = false;
    for (const auto& c : anchored_candidates(remaining)) {
      std::vector<Count> rest = minus(remaining, c);
      if (1 + minimum(canonical(rest)) == target) {
        r.witness.classes.push_back(c);
        remaining = std::move(rest);
        --target;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("oracle witness reconstruction failed");
  }
  return r;
}

ExactResult exact_point_thickness(const PartProfile& profile, Count max_total) {
  ExactSolver solver;
  return solver.solve(profile, max_total);
}

}  // namespace ptk
