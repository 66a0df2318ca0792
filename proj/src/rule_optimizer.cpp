#include "optbranch/rule_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "optbranch/errors.hpp"
#include "optbranch/wmsc.hpp"

namespace optbranch {

namespace {

double residual(std::span<const double> v, double gamma) {
  double s = 0.0;
  for (double x : v) s += std::pow(gamma, -x);
  return s - 1.0;
}

WmscInstance make_instance(std::span<const CandidateClause> candidates, std::size_t universe_size, double gamma) {
  WmscInstance inst;
  inst.universe_size = universe_size;
  inst.sets.reserve(candidates.size());
  inst.weights.reserve(candidates.size());
  for (const auto& c : candidates) {
    inst.sets.push_back(c.coverage);
    inst.weights.push_back(std::pow(gamma, -static_cast<double>(c.delta_rho)));
  }
  return inst;
}

}  // namespace

double find_gamma(std::span<const double> v) {
  if (v.empty()) throw InputError("find_gamma: empty branching vector");
  for (double x : v)
    if (!(x > 0.0)) throw InputError("find_gamma: branching vector entries must be positive");
  if (v.size() == 1) return 1.0;

  const double vmin = *std::min_element(v.begin(), v.end());
  double lo = 1.0;
  double hi = std::pow(static_cast<double>(v.size()), 1.0 / vmin);
  // The residual is strictly decreasing on (1, inf): positive at lo, <= 0 at hi.
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    double f = residual(v, mid);
    if (std::abs(f) < 1e-12 || hi - lo < 1e-15) break;
    (f > 0 ? lo : hi) = mid;
  }
  double g = mid;
  for (int i = 0; i < 2; ++i) {
    double f = residual(v, g);
    double df = 0.0;
    for (double x : v) df -= x * std::pow(g, -x - 1.0);
    if (df == 0.0) break;
    double next = g - f / df;
    if (!(next > 1.0) || std::abs(residual(v, next)) > std::abs(f)) break;
    g = next;
  }
  return g;
}

double find_gamma(std::span<const long> vector) {
  std::vector<double> v(vector.begin(), vector.end());
  return find_gamma(std::span<const double>(v));
}

OptimalBranchingResult minimize_gamma(std::span<const CandidateClause> candidates, std::size_t universe_size,
                                      SolverKind solver, std::uint64_t seed) {
  if (candidates.empty()) throw InfeasibleError("minimize_gamma: no candidate clauses");

  OptimalBranchingResult best;
  best.solver_kind = solver;
  best.gamma = std::numeric_limits<double>::infinity();
  double gamma = 2.0;
  best.gamma_trace.push_back(gamma);

  for (int round = 0; round < kMaxFixedPointRounds; ++round) {
    WmscInstance inst = make_instance(candidates, universe_size, gamma);
    WmscSolution sol = solver == SolverKind::Exact ? solve_exact(inst) : solve_lp(inst, seed + static_cast<std::uint64_t>(round));
    std::vector<long> vec;
    vec.reserve(sol.chosen.size());
    for (std::size_t i : sol.chosen) vec.push_back(candidates[i].delta_rho);
    const double next = find_gamma(std::span<const long>(vec));
    best.gamma_trace.push_back(next);

    if (next < best.gamma) {
      best.gamma = next;
      best.chosen_indices = sol.chosen;
      best.branching_vector = vec;
    }
    if (next >= gamma - 1e-12) {
      best.rule.clauses.clear();
      for (std::size_t i : best.chosen_indices) best.rule.clauses.push_back(candidates[i].clause);
      return best;
    }
    gamma = next;
  }
  throw NonConvergenceError("minimize_gamma: fixed-point iteration did not converge in " +
                            std::to_string(kMaxFixedPointRounds) + " rounds");
}

double minimize_gamma_bisection(std::span<const CandidateClause> candidates, std::size_t universe_size,
                                double epsilon) {
  if (candidates.empty()) throw InfeasibleError("minimize_gamma_bisection: no candidate clauses");
  auto feasible = [&](double gamma) {
    return solve_exact(make_instance(candidates, universe_size, gamma)).objective <= 1.0 + 1e-12;
  };
  if (feasible(1.0)) return 1.0;
  double lo = 1.0;
  double hi = 2.0;
  while (hi - lo > epsilon * 0.1) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::string render(const OptimalBranchingResult& result, std::span<const std::string> labels) {
  std::string out = "OptimalBranchingResult:\n selected_ids: [";
  for (std::size_t i = 0; i < result.chosen_indices.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(result.chosen_indices[i] + 1);
  }
  out += "]\n optimal_rule: DNF: " + to_string(result.rule, labels) + "\n branching_vector: [";
  for (std::size_t i = 0; i < result.branching_vector.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(result.branching_vector[i]);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", result.gamma);
  out += "]\n γ: ";
  out += buf;
  out += "\n";
  return out;
}

}  // namespace optbranch
