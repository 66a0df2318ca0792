#include "optbranch/graph.hpp"

#include <algorithm>
#include <string>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

void check_set(const Graph& g, const VertexSet& s, const char* what) {
  if (s.size() != g.num_vertices())
    throw InputError(std::string(what) + ": vertex set sized " + std::to_string(s.size()) +
                     " for a graph with " + std::to_string(g.num_vertices()) + " vertices");
}

// Branch on the highest-degree vertex; vertices of degree <= 1 are taken
// greedily.
int alpha_rec(const Graph& g, VertexSet alive) {
  int taken = 0;
  while (true) {
    if (alive.none()) return taken;
    Vertex best = -1;
    std::size_t best_deg = 0;
    Vertex low = -1;
    alive.for_each([&](std::size_t i) {
      auto v = static_cast<Vertex>(i);
      std::size_t d = g.neighbor_set(v).intersection_count(alive);
      if (d <= 1 && low < 0) low = v;
      if (best < 0 || d > best_deg) {
        best = v;
        best_deg = d;
      }
    });
    if (low >= 0) {
      alive -= g.neighbor_set(low);
      alive.reset(static_cast<std::size_t>(low));
      ++taken;
      continue;
    }
    if (best_deg == 0) return taken + static_cast<int>(alive.count());
    VertexSet without = alive;
    without.reset(static_cast<std::size_t>(best));
    VertexSet with = alive - g.neighbor_set(best);
    with.reset(static_cast<std::size_t>(best));
    return taken + std::max(alpha_rec(g, std::move(without)), 1 + alpha_rec(g, std::move(with)));
  }
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n), rows_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                       std::to_string(n) + " vertices");
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    auto su = static_cast<std::size_t>(u);
    auto sv = static_cast<std::size_t>(v);
    if (g.rows_[su].test(sv)) continue;
    g.rows_[su].set(sv);
    g.rows_[sv].set(su);
    ++g.num_edges_;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    list.reserve(g.rows_[v].count());
    g.rows_[v].for_each([&](std::size_t u) { list.push_back(static_cast<Vertex>(u)); });
  }
  return g;
}

VertexSet Graph::full_set() const {
  VertexSet s(num_vertices());
  s.set_all();
  return s;
}

VertexSet Graph::make_set(std::span<const Vertex> vs) const {
  VertexSet s(num_vertices());
  for (Vertex v : vs) {
    if (!contains(v)) throw InputError("invalid vertex id " + std::to_string(v));
    s.set(static_cast<std::size_t>(v));
  }
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = g.empty_set();
  s.for_each([&](std::size_t v) { out |= g.neighbor_set(static_cast<Vertex>(v)); });
  out -= s;
  return out;
}

VertexSet neighbors_k(const Graph& g, const VertexSet& s, int k, bool closed) {
  check_set(g, s, "neighbors_k");
  if (s.none()) throw InputError("neighbors_k: empty vertex set");
  if (k < 1) throw InputError("neighbors_k: order must be positive");
  VertexSet ball = s;  // N_0[S]
  VertexSet shell = s;
  for (int i = 0; i < k; ++i) {
    shell = open_neighborhood(g, ball);
    ball |= shell;
  }
  return closed ? ball : shell;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
  check_set(g, kept, "induced_subgraph");
  Subgraph out;
  std::vector<Vertex> index(g.num_vertices(), -1);
  kept.for_each([&](std::size_t v) {
    index[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(static_cast<Vertex>(v));
  });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    Vertex u = out.to_parent[i];
    for (Vertex w : g.neighbors(u))
      if (w > u && index[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(static_cast<Vertex>(i), index[static_cast<std::size_t>(w)]);
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

Subgraph induced_delete(const Graph& g, const VertexSet& removed) {
  check_set(g, removed, "induced_delete");
  return induced_subgraph(g, g.full_set() - removed);
}

long measure(const Graph& g, Measure m) {
  if (m == Measure::VertexCount) return static_cast<long>(g.num_vertices());
  long rho = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    rho += std::max(0, g.degree(static_cast<Vertex>(v)) - 2);
  return rho;
}

long measure_drop(const Graph& g, const VertexSet& removed, Measure m) {
  check_set(g, removed, "measure_drop");
  if (m == Measure::VertexCount) return static_cast<long>(removed.count());
  long drop = 0;
  VertexSet touched = g.empty_set();
  removed.for_each([&](std::size_t v) {
    drop += std::max(0, g.degree(static_cast<Vertex>(v)) - 2);
    touched |= g.neighbor_set(static_cast<Vertex>(v));
  });
  touched -= removed;
  touched.for_each([&](std::size_t u) {
    int d = g.degree(static_cast<Vertex>(u));
    int lost = static_cast<int>(g.neighbor_set(static_cast<Vertex>(u)).intersection_count(removed));
    drop += std::max(0, d - 2) - std::max(0, d - lost - 2);
  });
  return drop;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int small_alpha(const Graph& g, const VertexSet& within) {
  check_set(g, within, "small_alpha");
  return alpha_rec(g, within);
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_set(g, s, "is_independent");
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbor_set(static_cast<Vertex>(v)).intersects(s)) ok = false;
  });
  return ok;
}

Region::Region(const Graph& g, VertexSet vertices, VertexSet boundary)
    : host_(&g), vertices_(std::move(vertices)), boundary_(std::move(boundary)) {
  vertices_.for_each([&](std::size_t v) { local_order_.push_back(static_cast<Vertex>(v)); });
  for (std::size_t i = 0; i < local_order_.size(); ++i)
    if (boundary_.test(static_cast<std::size_t>(local_order_[i]))) boundary_positions_.push_back(static_cast<int>(i));
  if (local_order_.size() <= kMaxRegionWidth) {
    std::vector<int> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < local_order_.size(); ++i) local[static_cast<std::size_t>(local_order_[i])] = static_cast<int>(i);
    local_adjacency_.assign(local_order_.size(), 0);
    for (std::size_t i = 0; i < local_order_.size(); ++i)
      for (Vertex w : g.neighbors(local_order_[i]))
        if (int j = local[static_cast<std::size_t>(w)]; j >= 0) local_adjacency_[i] |= std::uint64_t{1} << j;
  }
}

VertexSet Region::to_host(std::uint64_t config) const {
  VertexSet out = host_->empty_set();
  for (std::size_t i = 0; i < local_order_.size() && i < 64; ++i)
    if ((config >> i) & 1U) out.set(static_cast<std::size_t>(local_order_[i]));
  return out;
}

Region region_of(const Graph& g, const VertexSet& vertices) {
  check_set(g, vertices, "region_of");
  if (vertices.none()) throw InputError("region_of: empty vertex set");
  VertexSet boundary = g.empty_set();
  vertices.for_each([&](std::size_t v) {
    if (!g.neighbor_set(static_cast<Vertex>(v)).is_subset_of(vertices)) boundary.set(v);
  });
  return Region(g, vertices, std::move(boundary));
}

Region region_with_boundary(const Graph& g, const VertexSet& vertices, const VertexSet& boundary) {
  check_set(g, vertices, "region_with_boundary");
  check_set(g, boundary, "region_with_boundary");
  if (vertices.none()) throw InputError("region_with_boundary: empty vertex set");
  if (!boundary.is_subset_of(vertices)) throw InputError("region_with_boundary: boundary must lie inside the region");
  return Region(g, vertices, boundary);
}

}  // namespace optbranch
