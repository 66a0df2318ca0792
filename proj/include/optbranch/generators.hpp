#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "optbranch/graph.hpp"

namespace optbranch {

enum class GeneratorKind { ThreeRegular, ErdosRenyi, KingsSubgraph, Grid };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::ThreeRegular;
  double avg_degree = 3.0;  // ErdosRenyi
  double filling = 0.8;     // KingsSubgraph, Grid
};

/// Random graph on n vertices, fully determined by (spec, n, seed).
///
/// ThreeRegular: pairing model, resampled until simple; n must be even and
/// n = 0 or n >= 4. ErdosRenyi: each pair independently with
/// p = avg_degree / (n - 1). KingsSubgraph / Grid: an L x L lattice with
/// L = ceil(sqrt(n / filling)) of which exactly n sites are occupied, chosen
/// uniformly; 8-neighbor (king) or 4-neighbor adjacency. Vertices are
/// numbered in row-major site order.
Graph generate(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed);

/// "3rr", "er", "ksg" or "grid".
GeneratorKind parse_generator_name(std::string_view name);
std::string generator_name(GeneratorKind kind);

/// Stateless 64-bit mixer used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace optbranch
