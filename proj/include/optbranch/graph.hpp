#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "optbranch/bitset.hpp"

namespace optbranch {

using Vertex = int;
using VertexSet = DynBitset;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is stored twice: as sorted
/// neighbor lists for iteration and as bit-set rows for set algebra.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Parallel edges are merged; a self-loop
  /// or an out-of-range endpoint throws InputError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighbor_set(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < num_vertices(); }

  VertexSet empty_set() const { return VertexSet(num_vertices()); }
  VertexSet full_set() const;
  VertexSet make_set(std::span<const Vertex> vs) const;

  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> rows_;
  std::size_t num_edges_ = 0;
};

/// A derived graph together with the map from its vertex ids to the ids of
/// the graph it was derived from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

enum class Measure { VertexCount, EffectiveDegree };

/// Open neighborhood N(S) = (union of N(v), v in S) \ S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// k-th order neighborhood: N_k(S) when closed is false, N_k[S] otherwise.
/// Throws InputError on an empty set, a set sized for another graph or k < 1.
VertexSet neighbors_k(const Graph& g, const VertexSet& s, int k, bool closed);

/// Induced subgraph on V(g) \ removed, vertices re-indexed ascending.
Subgraph induced_delete(const Graph& g, const VertexSet& removed);

/// Induced subgraph on kept, vertices re-indexed ascending.
Subgraph induced_subgraph(const Graph& g, const VertexSet& kept);

/// rho(g): |V| for VertexCount, sum of max(0, d(v) - 2) for EffectiveDegree.
long measure(const Graph& g, Measure m);

/// rho(g) - rho(g \ removed), computed without materializing the subgraph.
long measure_drop(const Graph& g, const VertexSet& removed, Measure m);

/// Connected components, each as an ascending vertex list, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Exact independence number of the subgraph induced by `within`, by simple
/// branching. Intended for small sets (a few dozen vertices).
int small_alpha(const Graph& g, const VertexSet& within);

bool is_independent(const Graph& g, const VertexSet& s);

/// A subgraph R of a host graph with its boundary and a fixed local bit order.
///
/// Local bit i corresponds to host vertex local_order()[i]; local_order is the
/// ascending list of V(R). The region keeps a pointer to its host, so the host
/// must outlive it.
class Region {
 public:
  const Graph& host() const { return *host_; }
  const VertexSet& vertices() const { return vertices_; }
  const VertexSet& boundary() const { return boundary_; }
  const std::vector<Vertex>& local_order() const { return local_order_; }
  std::size_t width() const { return local_order_.size(); }

  /// Local positions of the boundary vertices, ascending. Bit j of a boundary
  /// key corresponds to boundary_positions()[j].
  const std::vector<int>& boundary_positions() const { return boundary_positions_; }

  /// Local adjacency masks: bit j of local_adjacency()[i] is set iff local
  /// vertices i and j are adjacent. Only valid for width() <= 64.
  const std::vector<std::uint64_t>& local_adjacency() const { return local_adjacency_; }

  /// Host vertices whose local bit is set in `config`.
  VertexSet to_host(std::uint64_t config) const;

  friend Region region_of(const Graph& g, const VertexSet& vertices);
  friend Region region_with_boundary(const Graph& g, const VertexSet& vertices, const VertexSet& boundary);

 private:
  Region(const Graph& g, VertexSet vertices, VertexSet boundary);

  const Graph* host_ = nullptr;
  VertexSet vertices_;
  VertexSet boundary_;
  std::vector<Vertex> local_order_;
  std::vector<int> boundary_positions_;
  std::vector<std::uint64_t> local_adjacency_;
};

/// Region on `vertices` with the boundary derived from the host:
/// v is a boundary vertex iff it has a neighbor outside `vertices`.
Region region_of(const Graph& g, const VertexSet& vertices);

/// Region with an explicitly given boundary, used for rule discovery where
/// the environment is hypothetical. `boundary` must be a subset of `vertices`.
Region region_with_boundary(const Graph& g, const VertexSet& vertices, const VertexSet& boundary);

/// Largest region width supported by the 64-bit local configuration encoding.
inline constexpr std::size_t kMaxRegionWidth = 64;

}  // namespace optbranch
