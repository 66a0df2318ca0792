#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "optbranch/engine.hpp"
#include "optbranch/generators.hpp"

namespace optbranch {

struct BenchSpec {
  GeneratorSpec generator;
  std::vector<std::size_t> sizes;  // ascending
  int trials = 100;
  std::uint64_t seed = 0;
  SolveConfig solver;
  int jobs = 1;
};

struct TrialResult {
  std::size_t n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  int mis = 0;
  std::uint64_t branches = 0;
  double time_ms = 0.0;
};

struct SizeSummary {
  std::size_t n = 0;
  /// exp(mean of ln(branches + 1)).
  double geomean = 0.0;
  std::uint64_t max_branches = 0;

  friend bool operator==(const SizeSummary&, const SizeSummary&) = default;
};

struct BenchReport {
  std::vector<TrialResult> trials;  // ordered by (n, trial)
  std::vector<SizeSummary> sizes;
  /// exp(slope) of the least-squares line through (n, ln geomean); NaN with
  /// fewer than two distinct sizes.
  double fitted_gamma = 0.0;
};

/// A trial failed; the message names n, the trial index and its seed.
class BenchFailure : public std::runtime_error {
 public:
  BenchFailure(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Graph seed for (master seed, n, trial). Independent of the job count.
std::uint64_t trial_seed(std::uint64_t master, std::size_t n, int trial);

void validate(const BenchSpec& spec);

BenchReport run_bench(const BenchSpec& spec);

/// Per-size statistics over trials grouped by n, in ascending n.
std::vector<SizeSummary> summarize(std::span<const TrialResult> trials);

double fit_gamma(std::span<const SizeSummary> sizes);

/// CSV header "n,trial,seed,mis,branches,time_ms", one row per trial, then
/// '#'-prefixed summary lines. Numbers are printed round-trip exact.
void write_report_csv(std::ostream& out, const BenchReport& report);

/// Reads what write_report_csv wrote. Throws ParseError on malformed input.
BenchReport parse_report_csv(std::istream& in);

/// "a:b:step" -> {a, a+step, ..., <= b}; a single number is one size.
std::vector<std::size_t> parse_size_range(const std::string& text);

}  // namespace optbranch
