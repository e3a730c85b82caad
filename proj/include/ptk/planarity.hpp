#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ptk/core.hpp"

namespace ptk {

/// Closed-form planarity test for complete multipartite graphs.  Planar
/// profiles are exactly: empty, [a], [1,a], [2,a], [1,1,a], [1,2,2],
/// [1,1,1,1], [1,1,1,2] and [2,2,2].
bool classify_planar(const PartProfile& profile);

inline constexpr int kOracleVertexCap = 12;

/// Simple undirected graph on at most 32 vertices, stored as adjacency
/// bitmasks.  Only used as input to the Kuratowski oracle.
class SmallGraph {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxVertices = 32;

  explicit SmallGraph(int vertex_count);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Adding an existing edge is a no-op.  Self-loops and out-of-range
  /// endpoints throw DomainError.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[u] >> v & 1U) != 0; }
  Mask neighbours(int v) const { return adj_[v]; }
  int degree(int v) const;

  std::vector<std::pair<int, int>> edges() const;

 private:
  int vertex_count_;
  std::size_t edge_count_ = 0;
  std::vector<Mask> adj_;
};

/// Explicit graph with vertices grouped consecutively by part.  Throws
/// SizeError if the total exceeds `cap`.
SmallGraph build_graph(const PartProfile& profile, int cap = kOracleVertexCap);

/// Planarity by Kuratowski's theorem: exhaustive search for a subdivision
/// of K5 or K3,3.  Throws SizeError above kOracleVertexCap vertices.
bool kuratowski_planar(const SmallGraph& g);

}  // namespace ptk
