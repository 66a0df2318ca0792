#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optbranch/bitset.hpp"
#include "optbranch/branching_table.hpp"
#include "optbranch/graph.hpp"

namespace optbranch {

/// Conjunction of literals over a region's local variables.
///
/// Bit i of `mask` says variable i appears; bit i of `values` gives its sign
/// (1 = positive). Canonical form keeps values & ~mask == 0, so equality is
/// plain bit equality.
struct Clause {
  Config mask = 0;
  Config values = 0;

  bool satisfied_by(Config config) const { return (config & mask) == values; }
  /// T(c): the positions asserted to be in the independent set.
  Config positives() const { return values; }
  int literal_count() const;

  friend auto operator<=>(const Clause&, const Clause&) = default;
};

struct ClauseHash {
  std::size_t operator()(const Clause& c) const {
    std::uint64_t h = c.mask * 0x9e3779b97f4a7c15ULL;
    h ^= c.values + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Disjunction of clauses; one branch per clause.
struct DNF {
  std::vector<Clause> clauses;
};

/// A clause offered to the set-cover step with the rows it covers and its
/// measure reduction.
struct CandidateClause {
  Clause clause;
  DynBitset coverage;
  long delta_rho = 0;
};

/// The full-width clause satisfied only by `config`.
Clause single_cover(Config config, std::size_t width);

/// Literals shared with the same sign by both clauses; nullopt when none.
std::optional<Clause> intersection(const Clause& a, const Clause& b);

/// True iff some configuration in `row` satisfies the clause.
bool covers(const Clause& c, std::span<const Config> row);

/// Row indices of `t` covered by the clause.
DynBitset coverage(const Clause& c, const BranchingTable& t);

/// Closure of the single covers of all table configurations under
/// intersection with single covers, in deterministic insertion order.
std::vector<Clause> candidate_clauses(const BranchingTable& t);

/// Measure reduction of the branch that fixes clause `c` on region `r`:
/// rho(host) - rho(host \ (V(c) u N(T(c)))). Throws InternalError when the
/// reduction is not positive.
long delta_rho(const Clause& c, const Region& r, Measure m);

/// Candidate clauses of `t` with coverage and delta_rho. Clauses whose
/// reduction is zero are dropped.
std::vector<CandidateClause> build_candidates(const BranchingTable& t, const Region& r, Measure m);

bool is_valid_rule(const DNF& d, const BranchingTable& t);

/// Host vertices removed by the branch of clause `c`: V(c) u N(T(c)).
VertexSet branch_removal(const Clause& c, const Region& r);

/// Default literal labels "#1".."#width".
std::vector<std::string> default_labels(std::size_t width);

/// "¬#1 ∧ #3"; labels are indexed by local position.
std::string to_string(const Clause& c, std::span<const std::string> labels);
/// "(¬#1 ∧ #3) ∨ (#2)".
std::string to_string(const DNF& d, std::span<const std::string> labels);
/// Bit string of a configuration, local position 0 first.
std::string config_string(Config config, std::size_t width);

}  // namespace optbranch
