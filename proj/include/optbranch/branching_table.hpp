#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "optbranch/graph.hpp"

namespace optbranch {

/// Local configuration of a region: bit i is local vertex i.
using Config = std::uint64_t;

inline constexpr int kDefaultEnumerationLimit = 26;
/// Difference sets up to this size get an exact independence number during
/// environment pruning; larger ones fall back to their cardinality.
inline constexpr std::size_t kExactDifferenceLimit = 20;

/// Max local independent-set size per boundary configuration.
///
/// values[key] is indexed by a boundary key whose bit j is the j-th boundary
/// vertex in local order. kInfeasible marks -infinity: either the boundary
/// configuration is not independent, or it was pruned.
struct AlphaTensor {
  static constexpr std::int8_t kInfeasible = -1;

  Region region;
  std::vector<std::int8_t> values;

  std::size_t boundary_size() const { return region.boundary_positions().size(); }
  bool finite(std::uint64_t key) const { return values[key] != kInfeasible; }
  std::vector<std::uint64_t> finite_keys() const;
};

/// Boundary-grouped maximum independent sets of a region.
///
/// Row r holds every local configuration whose boundary key is
/// row_boundary[r] and whose size equals row_alpha[r]. Rows are ordered by
/// ascending boundary key; configurations within a row ascend.
struct BranchingTable {
  std::size_t width = 0;
  std::vector<std::vector<Config>> rows;
  std::vector<int> row_alpha;
  std::vector<std::uint64_t> row_boundary;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_configs() const;
};

/// Boundary key of a local configuration.
std::uint64_t boundary_key(const Region& r, Config config);

/// Exhaustive alpha-tensor of a region. Throws CapacityError when the region
/// is wider than `enumeration_limit`.
AlphaTensor alpha_tensor(const Region& r, int enumeration_limit = kDefaultEnumerationLimit);

/// Sets to -infinity every entry t with a strictly less restrictive s
/// (s a proper bit-subset of t) and alpha_s >= alpha_t.
AlphaTensor prune_irrelevant(const AlphaTensor& t);

/// Environment-aware pruning against the region's nearest outside neighbors.
/// Entries are visited in ascending key order and an entry s is dropped when
/// some still-surviving t' satisfies
///   alpha_s + alpha(G_left(s) \ G_left(t')) <= alpha_t'.
AlphaTensor prune_by_environment(const AlphaTensor& t, const Graph& host);

/// Groups the optimal local configurations by surviving boundary key.
BranchingTable boundary_grouped(const AlphaTensor& t);

}  // namespace optbranch
