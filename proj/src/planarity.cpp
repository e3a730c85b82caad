#include "ptk/planarity.hpp"

#include <array>
#include <bit>
#include <sstream>

namespace ptk {

bool classify_planar(const PartProfile& profile) {
  const auto p = profile.parts();
  switch (p.size()) {
    case 0:
    case 1:
      return true;
    case 2:
      return p[0] <= 2;  // K_{1,a}, K_{2,a}
    case 3:
      if (p[0] == 1 && p[1] == 1) return true;  // K_{1,1,a}
      return (p[0] == 1 && p[1] == 2 && p[2] == 2) ||
             (p[0] == 2 && p[1] == 2 && p[2] == 2);
    case 4:
      return p[0] == 1 && p[1] == 1 && p[2] == 1 && p[3] <= 2;
    default:
      return false;  // contains K5
  }
}

SmallGraph::SmallGraph(int vertex_count)
    : vertex_count_(vertex_count),
      adj_(static_cast<std::size_t>(vertex_count < 0 ? 0 : vertex_count), 0) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw SizeError("SmallGraph supports 0..32 vertices");
  }
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw DomainError("edge endpoint out of range");
  }
  if (u == v) throw DomainError("self-loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[u] |= Mask{1} << v;
  adj_[v] |= Mask{1} << u;
  ++edge_count_;
}

int SmallGraph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count_; ++u) {
    for (int v = u + 1; v < vertex_count_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SmallGraph build_graph(const PartProfile& profile, int cap) {
  if (profile.total() > cap || cap > SmallGraph::kMaxVertices) {
    std::ostringstream os;
    os << "profile has " << profile.total()
       << " vertices, explicit graph cap is " << cap;
    throw SizeError(os.str());
  }
  SmallGraph g(static_cast<int>(profile.total()));
  std::vector<int> part_of;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    part_of.insert(part_of.end(), static_cast<std::size_t>(profile[i]),
                   static_cast<int>(i));
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

using Mask = SmallGraph::Mask;

// Given fixed branch vertices, decide whether every required pair can be
// joined by internally vertex-disjoint paths avoiding all branch vertices.
class PathRouter {
 public:
  PathRouter(const SmallGraph& g, Mask branch,
             std::vector<std::pair<int, int>> pairs)
      : g_(g), branch_(branch), pairs_(std::move(pairs)) {}

  bool solve() { return route(0, 0); }

 private:
  bool route(std::size_t k, Mask used) {
    if (k == pairs_.size()) return true;
    const auto [from, to] = pairs_[k];
    return extend(from, to, k, used, 0);
  }

  // Depth-first enumeration of every simple path from `cur` to `target`
  // whose internal vertices avoid branch vertices and `used`.
  bool extend(int cur, int target, std::size_t k, Mask used, Mask path) {
    const Mask nb = g_.neighbours(cur);
    if (path != 0 && (nb >> target & 1U) != 0) {
      if (route(k + 1, used | path)) return true;
    }
    Mask free = nb & ~(branch_ | used | path);
    while (free != 0) {
      const int w = std::countr_zero(free);
      free &= free - 1;
      if (extend(w, target, k, used, path | Mask{1} << w)) return true;
    }
    return false;
  }

  const SmallGraph& g_;
  Mask branch_;
  std::vector<std::pair<int, int>> pairs_;
};

// Pairs joined by a direct edge need no routing: the edge uses no vertices,
// so it can replace any longer path in a solution.
bool route_pairs(const SmallGraph& g, Mask branch,
                 const std::vector<std::pair<int, int>>& all_pairs) {
  std::vector<std::pair<int, int>> pending;
  for (const auto& [u, v] : all_pairs) {
    if (!g.adjacent(u, v)) pending.emplace_back(u, v);
  }
  return PathRouter(g, branch, std::move(pending)).solve();
}

template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int size, Fn&& fn) {
  std::vector<int> chosen;
  const auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (static_cast<int>(chosen.size()) == size) return fn(chosen);
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0);
}

std::vector<int> vertices_with_degree(const SmallGraph& g, int min_degree) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= min_degree) out.push_back(v);
  }
  return out;
}

bool has_k5_subdivision(const SmallGraph& g) {
  const auto candidates = vertices_with_degree(g, 4);
  bool found = false;
  for_each_subset(candidates, 5, [&](const std::vector<int>& b) {
    Mask branch = 0;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < b.size(); ++i) {
      branch |= Mask{1} << b[i];
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        pairs.emplace_back(b[i], b[j]);
      }
    }
    found = route_pairs(g, branch, pairs);
    return found;
  });
  return found;
}

bool has_k33_subdivision(const SmallGraph& g) {
  const auto candidates = vertices_with_degree(g, 3);
  bool found = false;
  for_each_subset(candidates, 6, [&](const std::vector<int>& b) {
    Mask branch = 0;
    for (int v : b) branch |= Mask{1} << v;
    // Side A always holds b[0]; choose its two companions from b[1..5].
    for (int x = 1; x < 6 && !found; ++x) {
      for (int y = x + 1; y < 6 && !found; ++y) {
        std::array<int, 3> side_a{b[0], b[x], b[y]};
        std::vector<int> side_b;
        for (int i = 1; i < 6; ++i) {
          if (i != x && i != y) side_b.push_back(b[i]);
        }
        std::vector<std::pair<int, int>> pairs;
        for (int a : side_a) {
          for (int c : side_b) pairs.emplace_back(a, c);
        }
        found = route_pairs(g, branch, pairs);
      }
    }
    return found;
  });
  return found;
}

}  // namespace

bool kuratowski_planar(const SmallGraph& g) {
  const int n = g.vertex_count();
  if (n > kOracleVertexCap) {
    std::ostringstream os;
    os << "Kuratowski oracle is capped at " << kOracleVertexCap
       << " vertices, got " << n;
    throw SizeError(os.str());
  }
  if (n <= 4) return true;
  if (g.edge_count() > static_cast<std::size_t>(3 * n - 6)) return false;
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

}  // namespace ptk
