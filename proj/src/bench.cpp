#include "optbranch/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <type_traits>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

std::string exact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T to_number(const std::string& text, std::size_t line_no) {
  std::istringstream in(text);
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    char* end = nullptr;
    value = static_cast<T>(std::strtod(text.c_str(), &end));
    if (text.empty() || end != text.c_str() + text.size()) throw ParseError("bad number '" + text + "'", line_no);
    return value;
  } else {
    if (!(in >> value) || in.peek() != std::char_traits<char>::eof())
      throw ParseError("bad integer '" + text + "'", line_no);
    return value;
  }
}

TrialResult run_trial(const BenchSpec& spec, std::size_t n, int trial) {
  TrialResult r;
  r.n = n;
  r.trial = trial;
  r.seed = trial_seed(spec.seed, n, trial);
  try {
    const Graph g = generate(spec.generator, n, r.seed);
    const auto start = std::chrono::steady_clock::now();
    const SolveReport rep = mis_branch(g, spec.solver);
    const auto stop = std::chrono::steady_clock::now();
    if (!verify_witness(g, rep.witness) || static_cast<int>(rep.witness.count()) != rep.mis_size)
      throw InternalError("solver returned an invalid witness");
    r.mis = rep.mis_size;
    r.branches = rep.branch_count;
    r.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  } catch (const std::exception& e) {
    throw BenchFailure("trial n=" + std::to_string(n) + " index=" + std::to_string(trial) +
                           " seed=" + std::to_string(r.seed) + " failed: " + e.what(),
                       r.seed);
  }
  return r;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::size_t n, int trial) {
  return splitmix64(splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(n))) + static_cast<std::uint64_t>(trial));
}

void validate(const BenchSpec& spec) {
  if (spec.trials < 1) throw InputError("bench: trials must be at least 1");
  if (spec.jobs < 1) throw InputError("bench: jobs must be at least 1");
  if (spec.sizes.empty()) throw InputError("bench: no sizes given");
  if (!std::is_sorted(spec.sizes.begin(), spec.sizes.end())) throw InputError("bench: sizes must be ascending");
  if (spec.generator.kind == GeneratorKind::ThreeRegular)
    for (std::size_t n : spec.sizes)
      if (n % 2 != 0) throw InputError("bench: 3-regular sizes must be even, got " + std::to_string(n));
}

BenchReport run_bench(const BenchSpec& spec) {
  validate(spec);
  const std::size_t per_size = static_cast<std::size_t>(spec.trials);
  const std::size_t total = spec.sizes.size() * per_size;
  BenchReport report;
  report.trials.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_index = total;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      try {
        report.trials[job] = run_trial(spec, spec.sizes[job / per_size], static_cast<int>(job % per_size));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        // Report the earliest failing job so the error does not depend on timing.
        if (job < failed_index) {
          failed_index = job;
          failure = std::current_exception();
        }
      }
    }
  };
  const int workers = std::min<int>(spec.jobs, static_cast<int>(total));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.sizes = summarize(report.trials);
  report.fitted_gamma = fit_gamma(report.sizes);
  return report;
}

std::vector<SizeSummary> summarize(std::span<const TrialResult> trials) {
  std::vector<std::size_t> ns;
  for (const auto& t : trials) ns.push_back(t.n);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<SizeSummary> out;
  for (std::size_t n : ns) {
    double log_sum = 0.0;
    std::size_t count = 0;
    SizeSummary s;
    s.n = n;
    for (const auto& t : trials) {
      if (t.n != n) continue;
      log_sum += std::log(static_cast<double>(t.branches) + 1.0);
      ++count;
      s.max_branches = std::max(s.max_branches, t.branches);
    }
    s.geomean = std::exp(log_sum / static_cast<double>(count));
    out.push_back(s);
  }
  return out;
}

double fit_gamma(std::span<const SizeSummary> sizes) {
  if (sizes.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0.0;
  double my = 0.0;
  for (const auto& s : sizes) {
    mx += static_cast<double>(s.n);
    my += std::log(s.geomean);
  }
  mx /= static_cast<double>(sizes.size());
  my /= static_cast<double>(sizes.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& s : sizes) {
    const double dx = static_cast<double>(s.n) - mx;
    sxy += dx * (std::log(s.geomean) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(sxy / sxx);
}

void write_report_csv(std::ostream& out, const BenchReport& report) {
  out << "n,trial,seed,mis,branches,time_ms\n";
  for (const auto& t : report.trials)
    out << t.n << ',' << t.trial << ',' << t.seed << ',' << t.mis << ',' << t.branches << ',' << exact(t.time_ms)
        << '\n';
  out << "# summary\n# n,geomean,max_branches\n";
  for (const auto& s : report.sizes) out << "# " << s.n << ',' << exact(s.geomean) << ',' << s.max_branches << '\n';
  out << "# fitted_gamma," << exact(report.fitted_gamma) << '\n';
}

BenchReport parse_report_csv(std::istream& in) {
  BenchReport report;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != "n,trial,seed,mis,branches,time_ms")
    throw ParseError("missing report header", 1);
  ++line_no;
  bool fitted = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.size() > 2 ? line.substr(2) : "";
      if (body == "summary" || body == "n,geomean,max_branches") continue;
      auto fields = split(body, ',');
      if (fields.size() == 2 && fields[0] == "fitted_gamma") {
        report.fitted_gamma = to_number<double>(fields[1], line_no);
        fitted = true;
        continue;
      }
      if (fields.size() != 3) throw ParseError("bad summary line", line_no);
      SizeSummary s;
      s.n = to_number<std::size_t>(fields[0], line_no);
      s.geomean = to_number<double>(fields[1], line_no);
      s.max_branches = to_number<std::uint64_t>(fields[2], line_no);
      report.sizes.push_back(s);
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 6) throw ParseError("expected 6 fields", line_no);
    TrialResult t;
    t.n = to_number<std::size_t>(fields[0], line_no);
    t.trial = to_number<int>(fields[1], line_no);
    t.seed = to_number<std::uint64_t>(fields[2], line_no);
    t.mis = to_number<int>(fields[3], line_no);
    t.branches = to_number<std::uint64_t>(fields[4], line_no);
    t.time_ms = to_number<double>(fields[5], line_no);
    report.trials.push_back(t);
  }
  if (!fitted) throw ParseError("missing fitted_gamma line", line_no);
  return report;
}

std::vector<std::size_t> parse_size_range(const std::string& text) {
  auto parts = split(text, ':');
  auto number = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos != s.size() || v < 0) throw InputError("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InputError("bad size range '" + text + "' (expected a:b:step)");
    }
  };
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) throw InputError("bad size range '" + text + "' (expected a:b:step)");
  const std::size_t a = number(parts[0]);
  const std::size_t b = number(parts[1]);
  const std::size_t step = number(parts[2]);
  if (step == 0 || b < a) throw InputError("bad size range '" + text + "'");
  std::vector<std::size_t> out;
  for (std::size_t n = a; n <= b; n += step) out.push_back(n);
  return out;
}

}  // namespace optbranch
