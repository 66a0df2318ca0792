#include "optbranch/branching_table.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

// Depth-first enumeration of the independent sets of a region, carrying the
// boundary key along so no per-leaf bit extraction is needed.
template <class Visit>
class IndependentSets {
 public:
  IndependentSets(const Region& r, Visit& visit) : adj_(r.local_adjacency()), visit_(visit) {
    key_bit_.assign(r.width(), 0);
    const auto& pos = r.boundary_positions();
    for (std::size_t j = 0; j < pos.size(); ++j) key_bit_[static_cast<std::size_t>(pos[j])] = std::uint64_t{1} << j;
  }

  void run() { step(0, 0, 0, 0); }

 private:
  void step(std::size_t i, Config config, std::uint64_t key, int size) {
    if (i == adj_.size()) {
      visit_(config, key, size);
      return;
    }
    step(i + 1, config, key, size);
    if ((adj_[i] & config) == 0) step(i + 1, config | (Config{1} << i), key | key_bit_[i], size + 1);
  }

  const std::vector<std::uint64_t>& adj_;
  std::vector<std::uint64_t> key_bit_;
  Visit& visit_;
};

template <class Visit>
void for_each_independent_set(const Region& r, Visit&& visit) {
  IndependentSets<std::remove_reference_t<Visit>> e(r, visit);
  e.run();
}

}  // namespace

std::vector<std::uint64_t> AlphaTensor::finite_keys() const {
  std::vector<std::uint64_t> keys;
  for (std::uint64_t k = 0; k < values.size(); ++k)
    if (finite(k)) keys.push_back(k);
  return keys;
}

std::size_t BranchingTable::num_configs() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

std::uint64_t boundary_key(const Region& r, Config config) {
  std::uint64_t key = 0;
  const auto& pos = r.boundary_positions();
  for (std::size_t j = 0; j < pos.size(); ++j)
    if ((config >> pos[j]) & 1U) key |= std::uint64_t{1} << j;
  return key;
}

AlphaTensor alpha_tensor(const Region& r, int enumeration_limit) {
  const int limit = std::min<int>(enumeration_limit, static_cast<int>(kMaxRegionWidth) - 1);
  if (r.width() > static_cast<std::size_t>(std::max(limit, 0)))
    throw CapacityError("region has " + std::to_string(r.width()) + " vertices, enumeration limit is " +
                        std::to_string(enumeration_limit));
  AlphaTensor t{r, std::vector<std::int8_t>(std::size_t{1} << r.boundary_positions().size(), AlphaTensor::kInfeasible)};
  for_each_independent_set(r, [&](Config, std::uint64_t key, int size) {
    if (size > t.values[key]) t.values[key] = static_cast<std::int8_t>(size);
  });
  return t;
}

AlphaTensor prune_irrelevant(const AlphaTensor& t) {
  const std::size_t k = t.boundary_size();
  const std::size_t n = t.values.size();
  // best_sub[x] = max alpha over all subsets of x (inclusive), by the usual
  // sum-over-subsets sweep.
  std::vector<std::int8_t> best_sub = t.values;
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t x = 0; x < n; ++x)
      if (x & (std::size_t{1} << b)) best_sub[x] = std::max(best_sub[x], best_sub[x ^ (std::size_t{1} << b)]);

  AlphaTensor out = t;
  for (std::size_t x = 0; x < n; ++x) {
    if (!t.finite(x)) continue;
    std::int8_t strict = AlphaTensor::kInfeasible;
    for (std::size_t b = 0; b < k; ++b)
      if (x & (std::size_t{1} << b)) strict = std::max(strict, best_sub[x ^ (std::size_t{1} << b)]);
    if (strict >= t.values[x]) out.values[x] = AlphaTensor::kInfeasible;
  }
  return out;
}

AlphaTensor prune_by_environment(const AlphaTensor& t, const Graph& host) {
  const Region& r = t.region;
  if (&host != &r.host() && host.num_vertices() != r.host().num_vertices())
    throw InputError("prune_by_environment: host does not contain the region");
  const auto keys = t.finite_keys();
  const auto& pos = r.boundary_positions();

  // Outside neighbors of T(key) for every surviving key.
  std::vector<VertexSet> outside;
  outside.reserve(keys.size());
  for (std::uint64_t key : keys) {
    VertexSet nb = host.empty_set();
    for (std::size_t j = 0; j < pos.size(); ++j)
      if ((key >> j) & 1U) nb |= host.neighbor_set(r.local_order()[static_cast<std::size_t>(pos[j])]);
    nb -= r.vertices();
    outside.push_back(std::move(nb));
  }

  AlphaTensor out = t;
  std::vector<char> alive(keys.size(), 1);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (i == j || !alive[j]) continue;
      // G_left(s) \ G_left(t') = N(T(t')) \ N(T(s)) outside the region.
      VertexSet diff = outside[j] - outside[i];
      const std::size_t size = diff.count();
      int extra = 0;
      if (size > 0) extra = size <= kExactDifferenceLimit ? small_alpha(host, diff) : static_cast<int>(size);
      if (t.values[keys[i]] + extra <= t.values[keys[j]]) {
        alive[i] = 0;
        out.values[keys[i]] = AlphaTensor::kInfeasible;
        break;
      }
    }
  }
  return out;
}

BranchingTable boundary_grouped(const AlphaTensor& t) {
  const Region& r = t.region;
  const auto keys = t.finite_keys();
  if (keys.empty()) throw InternalError("boundary_grouped: tensor has no finite entry");

  std::vector<int> row_of(t.values.size(), -1);
  BranchingTable table;
  table.width = r.width();
  for (std::uint64_t key : keys) {
    row_of[key] = static_cast<int>(table.rows.size());
    table.rows.emplace_back();
    table.row_alpha.push_back(t.values[key]);
    table.row_boundary.push_back(key);
  }
  for_each_independent_set(r, [&](Config config, std::uint64_t key, int size) {
    int row = row_of[key];
    if (row >= 0 && size == t.values[key]) table.rows[static_cast<std::size_t>(row)].push_back(config);
  });
  for (auto& row : table.rows) std::sort(row.begin(), row.end());
  return table;
}

}  // namespace optbranch
