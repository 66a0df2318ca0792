#include "optbranch/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

// Mutable adjacency used only while reducing.
class WorkGraph {
 public:
  explicit WorkGraph(const Graph& g) : adj_(g.num_vertices()), alive_(g.num_vertices(), 1) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(static_cast<Vertex>(v));
      adj_[v].assign(nb.begin(), nb.end());
    }
  }

  std::size_t size() const { return adj_.size(); }
  bool alive(int v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  void remove(int v) {
    for (int u : adj_[static_cast<std::size_t>(v)]) {
      auto& a = adj_[static_cast<std::size_t>(u)];
      a.erase(std::lower_bound(a.begin(), a.end(), v));
    }
    adj_[static_cast<std::size_t>(v)].clear();
    alive_[static_cast<std::size_t>(v)] = 0;
  }

  int add(std::vector<int> neighbors) {
    const int z = static_cast<int>(adj_.size());
    for (int u : neighbors) adj_[static_cast<std::size_t>(u)].push_back(z);  // z is the largest id, stays sorted
    adj_.push_back(std::move(neighbors));
    alive_.push_back(1);
    return z;
  }

  // Lowest-degree alive vertex with degree <= 2, or -1.
  int pick_low() const {
    int best = -1;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (!alive_[v] || adj_[v].size() > 2) continue;
      if (best < 0 || adj_[v].size() < adj_[static_cast<std::size_t>(best)].size()) best = static_cast<int>(v);
      if (adj_[v].empty()) break;
    }
    return best;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<char> alive_;
};

struct SearchContext {
  const SolveConfig& cfg;
  SolveReport& report;
};

struct Outcome {
  int size = 0;
  VertexSet witness;
};

Outcome solve_graph(const Graph& g, int depth, SearchContext& ctx);

Outcome branch_component(const Graph& g, int depth, SearchContext& ctx) {
  const Region region = select_subgraph(g, ctx.cfg);
  const BranchingAnalysis analysis = optimal_branching(region, ctx.cfg);
  const auto& result = analysis.result;
#ifndef NDEBUG
  if (!is_valid_rule(result.rule, analysis.table)) throw InternalError("optimal rule does not cover its table");
#endif

  const std::size_t k = result.rule.clauses.size();
  const double gamma_key = std::round(result.gamma * 1e4) / 1e4;
  ++ctx.report.rule_stats[{k, gamma_key}];
  const int child_depth = k >= 2 ? depth + 1 : depth;
  if (k >= 2) {
    ctx.report.branch_count += k;
    ctx.report.max_depth = std::max(ctx.report.max_depth, child_depth);
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.branching_vector[a] > result.branching_vector[b];
  });

  Outcome best;
  best.size = -1;
  for (std::size_t idx : order) {
    const Clause& c = result.rule.clauses[idx];
    const Subgraph child = induced_delete(g, branch_removal(c, region));
    Outcome sub = solve_graph(child.graph, child_depth, ctx);
    const int value = sub.size + std::popcount(c.positives());
    if (value > best.size) {
      best.size = value;
      best.witness = region.to_host(c.positives());
      sub.witness.for_each([&](std::size_t v) { best.witness.set(static_cast<std::size_t>(child.to_parent[v])); });
    }
  }
  return best;
}

Outcome solve_graph(const Graph& g, int depth, SearchContext& ctx) {
  const Reduction red = reduce_fixpoint(g);
  const Graph& kernel = red.kernel();
  Outcome out;
  out.size = red.offset();
  VertexSet kernel_witness = kernel.empty_set();
  for (const auto& comp : connected_components(kernel)) {
    const Subgraph sub = induced_subgraph(kernel, kernel.make_set(comp));
    Outcome part = branch_component(sub.graph, depth, ctx);
    out.size += part.size;
    part.witness.for_each([&](std::size_t v) { kernel_witness.set(static_cast<std::size_t>(sub.to_parent[v])); });
  }
  out.witness = red.lift(kernel_witness);
  return out;
}

}  // namespace

VertexSet Reduction::lift(const VertexSet& kernel_witness) const {
  if (kernel_witness.size() != kernel_.num_vertices()) throw InputError("Reduction::lift: witness sized for another graph");
  std::vector<char> in(work_size_, 0);
  kernel_witness.for_each([&](std::size_t k) { in[static_cast<std::size_t>(kernel_to_work_[k])] = 1; });
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it->kind == Step::Kind::Take) {
      in[static_cast<std::size_t>(it->v)] = 1;
    } else if (in[static_cast<std::size_t>(it->z)]) {
      in[static_cast<std::size_t>(it->z)] = 0;
      in[static_cast<std::size_t>(it->u)] = 1;
      in[static_cast<std::size_t>(it->w)] = 1;
    } else {
      in[static_cast<std::size_t>(it->v)] = 1;
    }
  }
  VertexSet out(input_size_);
  for (std::size_t v = 0; v < input_size_; ++v)
    if (in[v]) out.set(v);
  return out;
}

Reduction reduce_fixpoint(const Graph& g) {
  Reduction red;
  red.input_size_ = g.num_vertices();
  WorkGraph work(g);
  for (int v = work.pick_low(); v >= 0; v = work.pick_low()) {
    const auto nb = work.neighbors(v);
    ++red.offset_;
    if (nb.size() == 2 && !work.adjacent(nb[0], nb[1])) {
      const int u = nb[0];
      const int w = nb[1];
      std::vector<int> merged;
      std::set_union(work.neighbors(u).begin(), work.neighbors(u).end(), work.neighbors(w).begin(),
                     work.neighbors(w).end(), std::back_inserter(merged));
      std::erase_if(merged, [&](int x) { return x == v || x == u || x == w; });
      work.remove(v);
      work.remove(u);
      work.remove(w);
      const int z = work.add(std::move(merged));
      red.steps_.push_back({Reduction::Step::Kind::Fold, v, u, w, z});
      continue;
    }
    // Degree 0, degree 1, or degree 2 inside a triangle: v is in some MIS.
    red.steps_.push_back({Reduction::Step::Kind::Take, v});
    for (int u : nb) work.remove(u);
    work.remove(v);
  }

  red.work_size_ = work.size();
  std::vector<int> index(work.size(), -1);
  for (std::size_t v = 0; v < work.size(); ++v) {
    if (!work.alive(static_cast<int>(v))) continue;
    index[v] = static_cast<int>(red.kernel_to_work_.size());
    red.kernel_to_work_.push_back(static_cast<int>(v));
  }
  std::vector<Edge> edges;
  for (int v : red.kernel_to_work_)
    for (int u : work.neighbors(v))
      if (u > v) edges.emplace_back(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
  red.kernel_ = Graph::from_edges(red.kernel_to_work_.size(), edges);
  return red;
}

Region select_subgraph(const Graph& g, const SolveConfig& cfg) {
  if (g.num_vertices() == 0) throw InputError("select_subgraph: empty graph");
  if (cfg.selection_radius < 1) throw InputError("select_subgraph: selection radius must be at least 1");
  const std::size_t limit = static_cast<std::size_t>(std::max(cfg.enumeration_limit, 1));

  std::tuple<std::size_t, std::size_t, Vertex> best_key{0, 0, -1};
  VertexSet best;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    VertexSet anchor = g.empty_set();
    anchor.set(v);
    VertexSet ball;
    for (int radius = cfg.selection_radius; radius >= 1; --radius) {
      VertexSet s = neighbors_k(g, anchor, radius, true);
      if (s.count() <= limit) {
        ball = std::move(s);
        break;
      }
    }
    if (ball.size() == 0) continue;
    std::size_t boundary = 0;
    ball.for_each([&](std::size_t u) {
      if (!g.neighbor_set(static_cast<Vertex>(u)).is_subset_of(ball)) ++boundary;
    });
    std::tuple<std::size_t, std::size_t, Vertex> key{boundary, ball.count(), static_cast<Vertex>(v)};
    if (std::get<2>(best_key) < 0 || key < best_key) {
      best_key = key;
      best = std::move(ball);
    }
  }
  if (std::get<2>(best_key) < 0) {
    Vertex hub = 0;
    for (std::size_t v = 1; v < g.num_vertices(); ++v)
      if (g.degree(static_cast<Vertex>(v)) > g.degree(hub)) hub = static_cast<Vertex>(v);
    best = g.empty_set();
    best.set(static_cast<std::size_t>(hub));
  }
  return region_of(g, best);
}

BranchingAnalysis optimal_branching(const Region& r, const SolveConfig& cfg) {
  AlphaTensor tensor = alpha_tensor(r, cfg.enumeration_limit);
  AlphaTensor reduced = prune_irrelevant(tensor);
  if (cfg.env_pruning) reduced = prune_by_environment(reduced, r.host());
  BranchingTable table = boundary_grouped(reduced);
  std::vector<CandidateClause> candidates = build_candidates(table, r, cfg.measure);
  OptimalBranchingResult result = minimize_gamma(candidates, table.num_rows(), cfg.solver_kind, cfg.seed);
  return BranchingAnalysis{std::move(tensor), std::move(reduced), std::move(table), std::move(candidates),
                           std::move(result)};
}

SolveReport mis_branch(const Graph& g, const SolveConfig& cfg) {
  SolveReport report;
  SearchContext ctx{cfg, report};
  Outcome out = solve_graph(g, 0, ctx);
  report.mis_size = out.size;
  report.witness = std::move(out.witness);
  return report;
}

bool verify_witness(const Graph& g, const VertexSet& w) {
  if (w.size() != g.num_vertices()) return false;
  return is_independent(g, w);
}

}  // namespace optbranch
