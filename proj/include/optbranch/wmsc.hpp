#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "optbranch/bitset.hpp"

namespace optbranch {

/// Weighted minimum set cover: cover {0..universe_size-1} with sets of
/// minimum total weight.
struct WmscInstance {
  std::size_t universe_size = 0;
  std::vector<DynBitset> sets;
  std::vector<double> weights;
};

struct WmscSolution {
  std::vector<std::size_t> chosen;  // ascending set indices
  double objective = 0.0;
  bool exact = false;
};

/// Optimum of the continuous relaxation 0 <= x_i <= 1.
struct LpSolution {
  std::vector<double> x;
  double objective = 0.0;
  std::size_t pivots = 0;
};

inline constexpr int kDefaultRoundingTrials = 32;
inline constexpr double kSimplexTolerance = 1e-9;

/// Throws InputError for malformed instances and InfeasibleError when the
/// sets do not cover the universe.
void validate(const WmscInstance& inst);

/// Sum of the chosen weights; true when the chosen sets cover the universe.
bool is_cover(const WmscInstance& inst, const std::vector<std::size_t>& chosen);

/// Indices surviving dominance reduction: a set is dropped when another set
/// covers a superset of it at no larger weight. Among identical coverage the
/// lightest, then lowest-index set is kept. The optimum is unchanged.
std::vector<std::size_t> undominated_sets(const WmscInstance& inst);

/// Exact minimum-weight cover by branch-and-bound.
///
/// Each node bounds the remaining cover by its LP relaxation, solved by
/// column generation; sets whose reduced cost closes the gap to the
/// incumbent are excluded for the subtree. The search branches on the set
/// with the largest fractional value, forcing it in first and then out. The
/// greedy cover seeds the incumbent. Ties between optimal covers are
/// resolved by the deterministic search order.
WmscSolution solve_exact(const WmscInstance& inst);

/// Optimum of the relaxation by a revised simplex with column generation
/// over the undominated sets. Pricing is relative to each column's weight;
/// Bland's rule takes over after a degenerate pivot. Throws NumericError if
/// it fails to converge.
LpSolution solve_lp_relaxation(const WmscInstance& inst);

/// LP relaxation followed by `trials` seeded randomized roundings, each
/// repaired greedily by weight-per-uncovered-element and stripped of
/// redundant sets; returns the lightest rounded cover.
WmscSolution solve_lp(const WmscInstance& inst, std::uint64_t seed, int trials = kDefaultRoundingTrials);

}  // namespace optbranch
