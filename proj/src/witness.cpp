#include "ptk/witness.hpp"

#include <sstream>

#include "ptk/formula.hpp"
#include "ptk/planarity.hpp"

namespace ptk {

namespace {

// Index of the first big part in d.reassemble().
std::size_t big_offset(const Decomposition& d) {
  return static_cast<std::size_t>(d.k1 + d.k2 + d.k3);
}

class PartitionBuilder {
 public:
  explicit PartitionBuilder(const Decomposition& d)
      : profile_(d.reassemble()) {}

  const PartProfile& profile() const { return profile_; }

  std::size_t open() {
    pending_.emplace_back(profile_.size(), 0);
    return pending_.size() - 1;
  }

  void add(std::size_t cls, std::size_t part, Count vertices) {
    pending_[cls][part] += vertices;
  }

  void add_single(std::size_t cls, PoolState& pool) {
    add(cls, pool.take_single(), 1);
  }

  void add_pair(std::size_t cls, PoolState& pool) {
    add(cls, pool.take_pair(), 2);
  }

  Partition finish() && {
    Partition out;
    out.classes.reserve(pending_.size());
    for (auto& taken : pending_) {
      ClassComposition cls(std::move(taken));
      const PartProfile induced = induced_profile(profile_, cls);
      if (!classify_planar(induced)) {
        throw InternalError("constructed class induces non-planar K_{" +
                            to_string(induced) + "} in profile " +
                            to_string(profile_));
      }
      out.classes.push_back(std::move(cls));
    }
    if (!out.is_exact_cover(profile_)) {
      throw InternalError("constructed partition of " + to_string(profile_) +
                          " is not an exact cover");
    }
    return out;
  }

 private:
  PartProfile profile_;
  std::vector<std::vector<Count>> pending_;
};

}  // namespace

PoolState PoolState::from(const Decomposition& d) {
  PoolState pool;
  const auto k1 = static_cast<std::size_t>(d.k1);
  const auto k2 = static_cast<std::size_t>(d.k2);
  const auto k3 = static_cast<std::size_t>(d.k3);
  for (std::size_t i = 0; i < k1; ++i) pool.singles.push_back(i);
  for (std::size_t i = 0; i < k2; ++i) pool.pairs.push_back(k1 + i);
  for (std::size_t i = 0; i < k3; ++i) {
    pool.singles.push_back(k1 + k2 + i);
    pool.pairs.push_back(k1 + k2 + i);
  }
  return pool;
}

std::size_t PoolState::take_single() {
  if (singles_left() == 0) throw InternalError("single pool exhausted");
  return singles[next_single++];
}

std::size_t PoolState::take_pair() {
  if (pairs_left() == 0) throw InternalError("pair pool exhausted");
  return pairs[next_pair++];
}

Partition construct_case_a(const Decomposition& d, Count t) {
  const Count n = d.n();
  if (d.p0 > 2 * n) throw CaseError("case (a) construction needs p0 <= 2n");
  if (t < 0 || t >= n) throw CaseError("case (a) construction needs 0 <= t < n");
  PartitionBuilder b(d);
  const PartProfile& profile = b.profile();
  const std::size_t first_big = big_offset(d);
  const std::size_t served_from = first_big + static_cast<std::size_t>(t);

  // Everything ahead of the served big parts is pooled.
  struct Chunk {
    std::size_t part;
    Count vertices;
  };
  std::vector<Chunk> pairs;
  std::vector<Chunk> singles;
  Count pooled = 0;
  for (std::size_t i = 0; i < served_from; ++i) pooled += profile[i];
  if (pooled > 2 * (n - t)) {
    throw InternalError("case (a) pool exceeds two vertices per class");
  }
  for (std::size_t i = 0; i < served_from; ++i) {
    for (Count k = 0; k < profile[i] / 2; ++k) pairs.push_back({i, 2});
    if (profile[i] % 2 != 0) singles.push_back({i, 1});
  }

  std::vector<std::size_t> classes;
  for (std::size_t i = served_from; i < profile.size(); ++i) {
    const std::size_t c = b.open();
    b.add(c, i, profile[i]);
    classes.push_back(c);
  }
  std::size_t slot = 0;
  for (const auto& chunk : pairs) b.add(classes[slot++], chunk.part, 2);
  for (std::size_t s = 0; s < singles.size(); ++s) {
    b.add(classes[slot + s / 2], singles[s].part, 1);
  }
  return std::move(b).finish();
}

Partition construct_case_b_part1(const Decomposition& d) {
  const Count n = d.n();
  if (d.p0 <= 2 * n || d.k1 + d.k3 < 2 * n) {
    throw CaseError("Part I construction needs p0 > 2n and k1 + k3 >= 2n");
  }
  PartitionBuilder b(d);
  PoolState pool = PoolState::from(d);
  const std::size_t first_big = big_offset(d);

  for (std::size_t j = 0; j < d.big.size(); ++j) {
    const std::size_t c = b.open();
    b.add(c, first_big + j, d.big[j]);
    b.add_single(c, pool);
    b.add_single(c, pool);
  }

  const std::size_t r1 = pool.singles_left();
  const std::size_t r2 = pool.pairs_left();
  if (r2 <= r1 / 3) {
    // Singles outnumber pairs 3:1; every pair gets three singles, the rest
    // form K4 classes plus one remainder class.
    while (pool.pairs_left() > 0) {
      const std::size_t c = b.open();
      for (int k = 0; k < 3; ++k) b.add_single(c, pool);
      b.add_pair(c, pool);
    }
    while (pool.singles_left() > 0) {
      const std::size_t c = b.open();
      for (int k = 0; k < 4 && pool.singles_left() > 0; ++k) {
        b.add_single(c, pool);
      }
    }
    return std::move(b).finish();
  }

  while (pool.singles_left() >= 3) {
    const std::size_t c = b.open();
    for (int k = 0; k < 3; ++k) b.add_single(c, pool);
    b.add_pair(c, pool);
  }
  while (pool.pairs_left() >= 3) {
    const std::size_t c = b.open();
    for (int k = 0; k < 3; ++k) b.add_pair(c, pool);
  }
  const std::size_t g1 = pool.singles_left();
  const std::size_t g2 = pool.pairs_left();
  if (g1 == 2 && g2 == 2) {
    // Two singles and two pairs together are non-planar; split them.
    for (int k = 0; k < 2; ++k) {
      const std::size_t c = b.open();
      b.add_single(c, pool);
      b.add_pair(c, pool);
    }
  } else if (g1 + g2 > 0) {
    const std::size_t c = b.open();
    while (pool.singles_left() > 0) b.add_single(c, pool);
    while (pool.pairs_left() > 0) b.add_pair(c, pool);
  }
  return std::move(b).finish();
}

Partition construct_case_b_part2(const Decomposition& d) {
  const Count n = d.n();
  if (d.p0 <= 2 * n || d.k1 + d.k3 >= 2 * n) {
    throw CaseError("Part II construction needs p0 > 2n and k1 + k3 < 2n");
  }
  PartitionBuilder b(d);
  PoolState pool = PoolState::from(d);
  const std::size_t first_big = big_offset(d);

  for (std::size_t j = 0; j < d.big.size(); ++j) {
    const std::size_t c = b.open();
    b.add(c, first_big + j, d.big[j]);
    if (pool.singles_left() >= 2) {
      b.add_single(c, pool);
      b.add_single(c, pool);
    } else if (pool.pairs_left() > 0) {
      b.add_pair(c, pool);
    } else {
      throw InternalError("Part II ran out of pairs before serving every "
                          "big part");
    }
  }
  while (pool.pairs_left() >= 3) {
    const std::size_t c = b.open();
    for (int k = 0; k < 3; ++k) b.add_pair(c, pool);
  }
  if (pool.singles_left() + pool.pairs_left() > 0) {
    const std::size_t c = b.open();
    while (pool.singles_left() > 0) b.add_single(c, pool);
    while (pool.pairs_left() > 0) b.add_pair(c, pool);
  }
  return std::move(b).finish();
}

Partition construct_partition(const PartProfile& profile) {
  if (profile.empty()) return {};
  const Decomposition d = decompose(profile);
  const ThicknessResult expected = point_thickness(profile);
  Partition out;
  switch (expected.trace.branch) {
    case Branch::CaseA:
      out = construct_case_a(d, expected.trace.t);
      break;
    case Branch::CaseBPart1:
      out = construct_case_b_part1(d);
      break;
    case Branch::CaseBPart2:
      out = construct_case_b_part2(d);
      break;
    case Branch::EmptyGraph:
      break;
  }
  if (static_cast<Count>(out.size()) != expected.value) {
    std::ostringstream os;
    os << "witness for " << to_string(profile) << " has " << out.size()
       << " classes, formula says " << expected.value;
    throw InternalError(os.str());
  }
  return out;
}

VerifyReport verify_partition(const PartProfile& profile,
                              const Partition& partition) {
  VerifyReport r;
  r.count = partition.size();
  r.formula_value = point_thickness(profile).value;
  bool dims_ok = true;
  bool all_planar = true;
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    const auto& cls = partition.classes[c];
    bool planar = false;
    try {
      const PartProfile induced = induced_profile(profile, cls);
      planar = classify_planar(induced);
      if (!planar) {
        r.problems.push_back("class " + std::to_string(c) +
                             " induces non-planar K_{" + to_string(induced) +
                             "}");
      }
    } catch (const CompositionError& e) {
      dims_ok = false;
      r.problems.push_back("class " + std::to_string(c) + ": " + e.what());
    }
    r.class_planarity.push_back(planar);
    all_planar = all_planar && planar;
  }
  r.cover = dims_ok && partition.is_exact_cover(profile);
  if (!r.cover) {
    r.problems.push_back("classes do not cover every vertex exactly once");
  }
  if (static_cast<Count>(r.count) != r.formula_value) {
    std::ostringstream os;
    os << "class count " << r.count << " differs from formula value "
       << r.formula_value;
    r.problems.push_back(os.str());
  }
  r.pass = r.cover && all_planar &&
           static_cast<Count>(r.count) == r.formula_value;
  return r;
}

}  // namespace ptk
