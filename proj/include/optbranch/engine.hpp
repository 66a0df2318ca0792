#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "optbranch/branching_table.hpp"
#include "optbranch/clause.hpp"
#include "optbranch/graph.hpp"
#include "optbranch/rule_optimizer.hpp"

namespace optbranch {

struct SolveConfig {
  Measure measure = Measure::EffectiveDegree;
  SolverKind solver_kind = SolverKind::Exact;
  int selection_radius = 2;
  bool env_pruning = true;
  int enumeration_limit = kDefaultEnumerationLimit;
  std::uint64_t seed = 0;
};

struct SolveReport {
  int mis_size = 0;
  VertexSet witness;
  /// Sum of |D| over every applied rule with at least two clauses.
  std::uint64_t branch_count = 0;
  int max_depth = 0;
  /// How often each (rule size, gamma rounded to 1e-4) was applied.
  std::map<std::pair<std::size_t, double>, std::size_t> rule_stats;
};

/// Result of exhaustive degree-0/1/2 reduction.
///
/// The kernel has minimum degree >= 3 (or is empty). alpha(input) equals
/// offset() + alpha(kernel), and lift() turns any independent set of the
/// kernel into one of the input that is larger by exactly offset().
class Reduction {
 public:
  const Graph& kernel() const { return kernel_; }
  int offset() const { return offset_; }
  VertexSet lift(const VertexSet& kernel_witness) const;

  friend Reduction reduce_fixpoint(const Graph& g);

 private:
  struct Step {
    enum class Kind { Take, Fold } kind;
    int v = -1;
    // Fold only: u, w are the folded neighbors of v, z the merged vertex.
    int u = -1, w = -1, z = -1;
  };

  std::size_t input_size_ = 0;
  std::size_t work_size_ = 0;
  Graph kernel_;
  int offset_ = 0;
  std::vector<int> kernel_to_work_;
  std::vector<Step> steps_;
};

/// Applies degree-0 and degree-1 removal and degree-2 folding until none
/// fires. Lowest degree first, then lowest vertex id.
Reduction reduce_fixpoint(const Graph& g);

/// The closed `selection_radius`-neighborhood of some vertex with the fewest
/// boundary vertices, ties broken by fewer vertices and then lower anchor id.
/// Neighborhoods wider than the enumeration limit shrink their radius; if no
/// vertex fits, a single highest-degree vertex is returned.
Region select_subgraph(const Graph& g, const SolveConfig& cfg);

/// Everything computed for one region on the way to its branching rule.
struct BranchingAnalysis {
  AlphaTensor tensor;
  AlphaTensor reduced;
  BranchingTable table;
  std::vector<CandidateClause> candidates;
  OptimalBranchingResult result;
};

BranchingAnalysis optimal_branching(const Region& r, const SolveConfig& cfg);

/// Exact maximum independent set by branch-and-reduce with rules generated
/// per region. Deterministic for a given (graph, config).
SolveReport mis_branch(const Graph& g, const SolveConfig& cfg = {});

/// True iff no edge has both endpoints in w.
bool verify_witness(const Graph& g, const VertexSet& w);

}  // namespace optbranch
