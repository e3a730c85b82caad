#include "ptk/selftest.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>

#include "ptk/oracle.hpp"
#include "ptk/planarity.hpp"
#include "ptk/witness.hpp"

namespace ptk {

namespace {

Count draw(Rng& rng, Count lo, Count hi) {
  return std::uniform_int_distribution<Count>(lo, hi)(rng);
}

std::string quoted(const PartProfile& p) { return '"' + to_string(p) + '"'; }

constexpr std::array kNonEmptySubcases{
    Subcase::Distribute,     Subcase::SinglesExact, Subcase::SinglesRemainder,
    Subcase::MixedRemainder, Subcase::MixedSplit,   Subcase::MixedExact,
    Subcase::PairsRemainder, Subcase::PairsExact,
};

constexpr std::array kLargeSmallSubcases{
    Subcase::SinglesExact,   Subcase::SinglesRemainder, Subcase::MixedRemainder,
    Subcase::MixedSplit,     Subcase::MixedExact,       Subcase::PairsRemainder,
    Subcase::PairsExact,
};

bool on_boundary(const PartProfile& p) {
  const Decomposition d = decompose(p);
  const Count twice_n = 2 * d.n();
  return d.p0 >= twice_n - 1 && d.p0 <= twice_n + 1;
}

SuiteResult compare_with_oracle(std::string name, Count max_total,
                                bool boundary_only) {
  SuiteResult r;
  r.name = std::move(name);
  if (max_total <= 0) {
    r.skipped = true;
    r.note = "oracle limit is 0";
    return r;
  }
  ExactSolver solver;
  for (const auto& p : profiles_up_to(max_total)) {
    if (boundary_only && !on_boundary(p)) continue;
    ++r.checked;
    const ExactResult exact = solver.solve(p, max_total);
    const Count formula = point_thickness(p).value;
    if (exact.value != formula) {
      std::ostringstream os;
      os << quoted(p) << ": oracle " << exact.value << ", formula " << formula;
      r.fail(os.str());
      continue;
    }
    const VerifyReport rep = verify_partition(p, exact.witness);
    if (!rep.pass) r.fail(quoted(p) + ": oracle witness fails verification");
  }
  return r;
}

}  // namespace

void SuiteResult::fail(std::string what) {
  ++failed;
  if (failures.size() < kMaxRecorded) failures.push_back(std::move(what));
}

PartProfile random_profile(Rng& rng, Subcase target, Count max_big) {
  if (target == Subcase::Empty) return {};
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    const Count parts = draw(rng, 1, 9);
    const bool small_big = draw(rng, 0, 1) == 0;
    std::vector<Count> sizes;
    for (Count i = 0; i < parts; ++i) {
      const Count kind = draw(rng, 0, 3);
      if (kind < 3) {
        sizes.push_back(kind + 1);
      } else {
        sizes.push_back(draw(rng, 4, small_big ? std::min<Count>(8, max_big)
                                               : max_big));
      }
    }
    PartProfile p(std::move(sizes));
    if (classify_subcase(decompose(p)) == target) return p;
  }
  throw InternalError("random_profile: target subcase not reached");
}

SuiteResult check_oracle_vs_formula(Count max_total) {
  return compare_with_oracle("oracle-vs-formula", max_total, false);
}

SuiteResult check_boundary(Count max_total) {
  return compare_with_oracle("boundary-p0-2n", max_total, true);
}

SuiteResult check_classifier(Count max_total) {
  SuiteResult r;
  r.name = "classifier-vs-kuratowski";
  for (Count total = 0; total <= max_total; ++total) {
    for (const auto& p : profiles_with_total(total)) {
      ++r.checked;
      const bool fast = classify_planar(p);
      const bool slow = kuratowski_planar(build_graph(p));
      if (fast != slow) {
        r.fail(quoted(p) + ": classifier " + (fast ? "planar" : "non-planar") +
               ", Kuratowski " + (slow ? "planar" : "non-planar"));
      }
    }
  }
  return r;
}

SuiteResult check_complete_graphs(Count max_n) {
  SuiteResult r;
  r.name = "complete-graph";
  for (Count n = 1; n <= max_n; ++n) {
    ++r.checked;
    const PartProfile p(std::vector<Count>(static_cast<std::size_t>(n), 1));
    const Count value = point_thickness(p).value;
    const Count expected = (n + 3) / 4;
    if (value != expected) {
      std::ostringstream os;
      os << "\"1^" << n << "\": formula " << value << ", expected " << expected;
      r.fail(os.str());
    }
  }
  return r;
}

SuiteResult check_witnesses(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "witness-certification";
  Rng rng(seed);
  std::map<Subcase, std::size_t> seen;
  for (std::size_t i = 0; i < count; ++i) {
    const Subcase target = kNonEmptySubcases[i % kNonEmptySubcases.size()];
    const PartProfile p = random_profile(rng, target);
    ++seen[target];
    ++r.checked;
    try {
      const Partition w = construct_partition(p);
      const VerifyReport rep = verify_partition(p, w);
      if (!rep.pass) {
        r.fail(quoted(p) + ": " +
               (rep.problems.empty() ? "verification failed"
                                     : rep.problems.front()));
        continue;
      }
      const auto big = decompose(p).big;
      const Count bound =
          std::max<Count>(6, big.empty() ? 0 : 2 + big.back());
      for (const auto& c : w.classes) {
        if (c.total() > bound) {
          r.fail(quoted(p) + ": class larger than max(6, 2 + max part)");
          break;
        }
      }
      if (construct_partition(p) != w) r.fail(quoted(p) + ": nondeterministic");
    } catch (const Error& e) {
      r.fail(quoted(p) + ": " + e.what());
    }
  }
  std::ostringstream note;
  bool first = true;
  for (Subcase s : kNonEmptySubcases) {
    note << (first ? "" : " ") << to_string(s) << '=' << seen[s];
    first = false;
    if (count >= kNonEmptySubcases.size() && seen[s] == 0) {
      r.fail(std::string("stratum never sampled: ") + std::string(to_string(s)));
    }
  }
  r.note = note.str();
  return r;
}

SuiteResult check_big_part_invariance(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "big-part-invariance";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Subcase target = kLargeSmallSubcases[i % kLargeSmallSubcases.size()];
    PartProfile p;
    do {
      p = random_profile(rng, target);
    } while (decompose(p).n() == 0);
    ++r.checked;
    const Count base = point_thickness(p).value;
    const std::size_t first_big = p.size() - decompose(p).big.size();
    for (std::size_t j = first_big; j < p.size(); ++j) {
      std::vector<Count> grown(p.parts().begin(), p.parts().end());
      ++grown[j];
      const PartProfile q(std::move(grown));
      if (point_thickness(q).value != base) {
        r.fail(quoted(p) + " vs " + quoted(q) + ": value changed");
        break;
      }
    }
  }
  return r;
}

SuiteResult check_case_a(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "distribute-case";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const PartProfile p = random_profile(rng, Subcase::Distribute);
    ++r.checked;
    const Decomposition d = decompose(p);
    const Count n = d.n();
    // Exhaustive maximum over every j, no early exit.
    Count t = -1;
    for (Count j = 0; j <= n; ++j) {
      Count lhs = d.p0;
      for (Count k = 0; k < j; ++k) lhs += d.big[static_cast<std::size_t>(k)];
      if (lhs <= 2 * (n - j)) t = std::max(t, j);
    }
    const ThicknessResult res = point_thickness(p);
    if (t < 0 || res.value != n - t || res.trace.t != t) {
      std::ostringstream os;
      os << quoted(p) << ": formula " << res.value << " (t=" << res.trace.t
         << "), exhaustive n - t = " << n - t;
      r.fail(os.str());
      continue;
    }
    std::vector<Count> grown(p.parts().begin(), p.parts().end());
    grown.push_back(4);
    const PartProfile q(std::move(grown));
    if (point_thickness(q).value < res.value) {
      r.fail(quoted(p) + ": adding a size-4 part lowered the value");
    }
  }
  return r;
}

SuiteResult check_monotonicity(std::size_t count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "monotonicity";
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Subcase target = kNonEmptySubcases[i % kNonEmptySubcases.size()];
    const PartProfile p = random_profile(rng, target, 12);
    ++r.checked;
    const Count base = point_thickness(p).value;

    std::vector<Count> appended(p.parts().begin(), p.parts().end());
    appended.push_back(draw(rng, 1, 12));
    const PartProfile q(std::move(appended));
    if (point_thickness(q).value < base) {
      r.fail(quoted(p) + " -> " + quoted(q) + ": appending lowered the value");
    }

    std::vector<Count> grown(p.parts().begin(), p.parts().end());
    ++grown[static_cast<std::size_t>(
        draw(rng, 0, static_cast<Count>(grown.size()) - 1))];
    const PartProfile g(std::move(grown));
    if (point_thickness(g).value < base) {
      r.fail(quoted(p) + " -> " + quoted(g) + ": growing lowered the value");
    }
  }
  return r;
}

void print_suite(std::ostream& os, const SuiteResult& r) {
  os << r.name << ": "
     << (r.skipped ? "SKIP" : r.ok() ? "PASS" : "FAIL")
     << " checked=" << r.checked << " failed=" << r.failed;
  if (!r.note.empty()) os << " (" << r.note << ')';
  os << '\n';
  for (const auto& f : r.failures) os << "  " << f << '\n';
}

}  // namespace ptk
