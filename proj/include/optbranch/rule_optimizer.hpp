#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "optbranch/clause.hpp"

namespace optbranch {

enum class SolverKind { Exact, LpRelaxed };

inline constexpr int kMaxFixedPointRounds = 64;

struct OptimalBranchingResult {
  DNF rule;
  std::vector<std::size_t> chosen_indices;  // into the candidate list
  std::vector<long> branching_vector;       // delta_rho per clause of `rule`
  double gamma = 1.0;
  SolverKind solver_kind = SolverKind::Exact;
  /// gamma after every fixed-point round, starting with the initial 2.
  std::vector<double> gamma_trace;
};

/// Unique gamma >= 1 with sum_i gamma^(-v_i) = 1; 1 for a single entry.
double find_gamma(std::span<const long> vector);
double find_gamma(std::span<const double> vector);

/// Fixed-point minimization of the branching factor over covers built from
/// `candidates`: start at gamma = 2, solve the set cover with weights
/// gamma^(-delta_rho), re-solve gamma from the chosen vector, and stop once
/// gamma no longer decreases. With the exact solver the result is the global
/// minimum. `seed` only affects the LP rounding.
OptimalBranchingResult minimize_gamma(std::span<const CandidateClause> candidates, std::size_t universe_size,
                                      SolverKind solver, std::uint64_t seed = 0);

/// Bisection on gamma in [1, 2] over "some cover has weight <= 1", to within
/// `epsilon`. A cross-check for minimize_gamma.
double minimize_gamma_bisection(std::span<const CandidateClause> candidates, std::size_t universe_size,
                                double epsilon = 1e-6);

/// Multi-line rendering with the selected ids (1-based), the rule, the
/// branching vector and gamma.
std::string render(const OptimalBranchingResult& result, std::span<const std::string> labels);

}  // namespace optbranch
