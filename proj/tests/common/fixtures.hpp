#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "optbranch/graph.hpp"

namespace fixtures {

using optbranch::Edge;
using optbranch::Graph;
using optbranch::Vertex;
using optbranch::VertexSet;

inline VertexSet set_of(const Graph& g, std::initializer_list<Vertex> vs) {
  VertexSet s = g.empty_set();
  for (Vertex v : vs) s.set(static_cast<std::size_t>(v));
  return s;
}

inline VertexSet first_n(const Graph& g, std::size_t n) {
  VertexSet s = g.empty_set();
  for (std::size_t v = 0; v < n; ++v) s.set(v);
  return s;
}

// Small example region: a..e = 0..4, boundary a, b, c.
inline Graph small_graph() {
  const std::vector<Edge> e{{0, 4}, {0, 3}, {1, 4}, {2, 3}, {3, 4}};
  return Graph::from_edges(5, e);
}

// The same region with one private outside neighbor per boundary vertex:
// f-a, g-b, h-c.
inline Graph small_with_environment() {
  const std::vector<Edge> e{{0, 4}, {0, 3}, {1, 4}, {2, 3}, {3, 4}, {5, 0}, {6, 1}, {7, 2}};
  return Graph::from_edges(8, e);
}

// Domination example: w, v, j, k, l = 0..4 with boundary j, k, l.
inline Graph domination_graph(bool with_kl_edge) {
  std::vector<Edge> e{{2, 0}, {2, 1}, {0, 1}, {0, 3}, {0, 4}, {1, 4}};
  if (with_kl_edge) e.emplace_back(3, 4);
  return Graph::from_edges(5, e);
}

// Depth-3 binary tree hung below `anchor`: anchor - k2, k2 - {k3, k4},
// each of those with two leaves.
inline void attach_tree(std::vector<Edge>& edges, Vertex& next, Vertex anchor) {
  const Vertex k2 = next++;
  edges.emplace_back(anchor, k2);
  for (int child = 0; child < 2; ++child) {
    const Vertex mid = next++;
    edges.emplace_back(k2, mid);
    for (int leaf = 0; leaf < 2; ++leaf) edges.emplace_back(mid, next++);
  }
}

// Pentagon and hexagon sharing two edges: a..h = 0..7, boundary a, c, d, f,
// g, h, each with a private tree.
inline Graph ph2_graph() {
  std::vector<Edge> e{{0, 1}, {0, 4}, {1, 2}, {4, 3}, {2, 3}, {1, 5}, {4, 7}, {6, 5}, {6, 7}};
  Vertex next = 8;
  for (Vertex b : {0, 2, 3, 5, 6, 7}) attach_tree(e, next, b);
  return Graph::from_edges(static_cast<std::size_t>(next), e);
}

// Center a = 0 joined to three identical arms. Arm i uses vertices
// 1 + 7i .. 7 + 7i in the order x, g, h, o, r, p, q with edges x-g, x-h,
// g-o, g-p, h-r, h-q, o-r, p-q; o, r, p, q each carry a private tree. The
// region is vertices 0..21.
inline Graph bottleneck_graph() {
  std::vector<Edge> e;
  Vertex next = 22;
  for (int arm = 0; arm < 3; ++arm) {
    const Vertex x = 1 + 7 * arm, g = x + 1, h = x + 2, o = x + 3, r = x + 4, p = x + 5, q = x + 6;
    e.insert(e.end(), {{0, x}, {x, g}, {x, h}, {g, o}, {g, p}, {h, r}, {h, q}, {o, r}, {p, q}});
    for (Vertex b : {o, r, p, q}) attach_tree(e, next, b);
  }
  return Graph::from_edges(static_cast<std::size_t>(next), e);
}

inline Graph random_er(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> e;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (u(rng) < p) e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph::from_edges(n, e);
}

// Exhaustive independence number over all 2^n subsets.
inline int brute_force_alpha(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((s >> v & 1) && (adj[v] & s)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace fixtures
