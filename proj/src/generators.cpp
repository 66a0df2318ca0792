#include "optbranch/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

// Distribution objects in <random> are implementation-defined, so draws are
// done by hand to keep graphs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr int kMaxPairingAttempts = 100000;

Graph three_regular(std::size_t n, Rng& rng) {
  if (n % 2 != 0) throw InputError("3-regular graph needs an even vertex count, got " + std::to_string(n));
  if (n == 0) return Graph(0);
  if (n < 4) throw InputError("no simple 3-regular graph on " + std::to_string(n) + " vertices");
  std::vector<Vertex> points;
  points.reserve(3 * n);
  for (std::size_t v = 0; v < n; ++v)
    for (int k = 0; k < 3; ++k) points.push_back(static_cast<Vertex>(v));

  for (int attempt = 0; attempt < kMaxPairingAttempts; ++attempt) {
    rng.shuffle(points);
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex a = std::min(points[i], points[i + 1]);
      Vertex b = std::max(points[i], points[i + 1]);
      simple = a != b && seen.emplace(a, b).second;
    }
    if (simple) {
      std::vector<Edge> edges(seen.begin(), seen.end());
      return Graph::from_edges(n, edges);
    }
  }
  throw InternalError("pairing model did not produce a simple graph");
}

Graph erdos_renyi(std::size_t n, double avg_degree, Rng& rng) {
  if (!(avg_degree >= 0.0)) throw InputError("average degree must be non-negative");
  if (n < 2) return Graph(n);
  const double p = avg_degree / static_cast<double>(n - 1);
  if (p > 1.0) throw InputError("average degree exceeds n - 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(n, edges);
}

Graph lattice(std::size_t n, double filling, bool diagonals, Rng& rng) {
  if (!(filling > 0.0 && filling <= 1.0)) throw InputError("filling must lie in (0, 1]");
  if (n == 0) return Graph(0);
  auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n) / filling) - 1e-9));
  while (side * side < n) ++side;

  std::vector<std::size_t> sites(side * side);
  for (std::size_t i = 0; i < sites.size(); ++i) sites[i] = i;
  for (std::size_t i = 0; i < n; ++i) std::swap(sites[i], sites[i + rng.below(sites.size() - i)]);
  sites.resize(n);
  std::sort(sites.begin(), sites.end());

  std::vector<long> index(side * side, -1);
  for (std::size_t i = 0; i < n; ++i) index[sites[i]] = static_cast<long>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const long r = static_cast<long>(sites[i] / side);
    const long c = static_cast<long>(sites[i] % side);
    for (long dr = 0; dr <= 1; ++dr) {
      for (long dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc <= 0) continue;  // each pair once
        if (!diagonals && dr != 0 && dc != 0) continue;
        const long rr = r + dr;
        const long cc = c + dc;
        if (rr >= static_cast<long>(side) || cc < 0 || cc >= static_cast<long>(side)) continue;
        const long j = index[static_cast<std::size_t>(rr) * side + static_cast<std::size_t>(cc)];
        if (j >= 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph generate(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  switch (spec.kind) {
    case GeneratorKind::ThreeRegular:
      return three_regular(n, rng);
    case GeneratorKind::ErdosRenyi:
      return erdos_renyi(n, spec.avg_degree, rng);
    case GeneratorKind::KingsSubgraph:
      return lattice(n, spec.filling, true, rng);
    case GeneratorKind::Grid:
      return lattice(n, spec.filling, false, rng);
  }
  throw InternalError("unknown generator kind");
}

GeneratorKind parse_generator_name(std::string_view name) {
  if (name == "3rr") return GeneratorKind::ThreeRegular;
  if (name == "er") return GeneratorKind::ErdosRenyi;
  if (name == "ksg") return GeneratorKind::KingsSubgraph;
  if (name == "grid") return GeneratorKind::Grid;
  throw InputError("unknown generator '" + std::string(name) + "' (expected 3rr, er, ksg or grid)");
}

std::string generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::ThreeRegular:
      return "3rr";
    case GeneratorKind::ErdosRenyi:
      return "er";
    case GeneratorKind::KingsSubgraph:
      return "ksg";
    case GeneratorKind::Grid:
      return "grid";
  }
  return "?";
}

}  // namespace optbranch
