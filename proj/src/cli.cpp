#include "optbranch/cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "optbranch/bench.hpp"
#include "optbranch/clause.hpp"
#include "optbranch/engine.hpp"
#include "optbranch/errors.hpp"
#include "optbranch/graph_io.hpp"
#include "optbranch/rule_optimizer.hpp"

namespace optbranch {

namespace {

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("optbranch", sink);
  logger->set_pattern("[%l] %v");
  const char* env = std::getenv("OPTBRANCH_LOG");
  const std::string level = env ? env : "off";
  if (level == "debug") {
    logger->set_level(spdlog::level::debug);
  } else if (level == "info") {
    logger->set_level(spdlog::level::info);
  } else {
    if (level != "off") err << "warning: OPTBRANCH_LOG='" << level << "' not recognized, logging disabled\n";
    logger->set_level(spdlog::level::off);
  }
  return logger;
}

struct CommonOptions {
  std::string format = "edgelist";
  bool lp = false;
  bool no_env_pruning = false;
  std::string measure = "ed";
  int limit = kDefaultEnumerationLimit;
  std::uint64_t seed = 0;
};

void add_solver_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_flag("--lp", opts.lp, "Use the LP relaxation with randomized rounding instead of the exact set cover");
  cmd->add_flag("--no-env-pruning", opts.no_env_pruning, "Disable pruning of table rows by the environment");
  cmd->add_option("--measure", opts.measure, "Problem-size measure: vc (vertex count) or ed (effective degree)")
      ->check(CLI::IsMember({"vc", "ed"}));
  cmd->add_option("--limit", opts.limit, "Largest region size to enumerate")->check(CLI::Range(1, 60));
}

SolveConfig to_config(const CommonOptions& opts) {
  SolveConfig cfg;
  cfg.measure = opts.measure == "vc" ? Measure::VertexCount : Measure::EffectiveDegree;
  cfg.solver_kind = opts.lp ? SolverKind::LpRelaxed : SolverKind::Exact;
  cfg.env_pruning = !opts.no_env_pruning;
  cfg.enumeration_limit = opts.limit;
  cfg.seed = opts.seed;
  return cfg;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// A vertex token is a 1-based id or a single lowercase letter (a = 1).
Vertex resolve_vertex(const std::string& token, const Graph& g) {
  long id = 0;
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') {
    id = token[0] - 'a' + 1;
  } else {
    try {
      std::size_t pos = 0;
      id = std::stol(token, &pos);
      if (pos != token.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + token + "' (expected a 1-based id or a letter)");
    }
  }
  if (id < 1 || static_cast<std::size_t>(id) > g.num_vertices())
    throw RangeError("vertex '" + token + "' outside 1.." + std::to_string(g.num_vertices()));
  return static_cast<Vertex>(id - 1);
}

std::string join_labels(const std::vector<std::string>& labels, const std::vector<int>& positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ' ';
    out += labels[static_cast<std::size_t>(positions[i])];
  }
  return out;
}

int run_solve(const std::string& file, const CommonOptions& opts, bool json, std::ostream& out, spdlog::logger& log) {
  const Graph g = parse_graph(file, parse_format_name(opts.format));
  log.info("solve: {} vertices, {} edges", g.num_vertices(), g.num_edges());
  const auto start = std::chrono::steady_clock::now();
  const SolveReport rep = mis_branch(g, to_config(opts));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!verify_witness(g, rep.witness) || static_cast<int>(rep.witness.count()) != rep.mis_size)
    throw InternalError("solver returned an invalid witness");
  for (const auto& [key, count] : rep.rule_stats)
    log.debug("rule size {} gamma {:.4f}: applied {} times", key.first, key.second, count);
  log.info("solve: max depth {}, {:.3f} ms", rep.max_depth, ms);
  if (json) {
    nlohmann::json j = {{"mis_size", rep.mis_size}, {"branch_count", rep.branch_count}, {"time_ms", ms}};
    out << j.dump() << '\n';
  } else {
    out << "mis_size=" << rep.mis_size << " branches=" << rep.branch_count << '\n';
  }
  return 0;
}

int run_discover(const std::string& file, const CommonOptions& opts, const std::string& region_text,
                 const std::string& boundary_text, const std::string& labels_text, std::ostream& out,
                 spdlog::logger& log) {
  const Graph g = parse_graph(file, parse_format_name(opts.format));
  const auto region_tokens = split_list(region_text);
  VertexSet vertices = g.empty_set();
  bool lettered = true;
  std::vector<std::pair<Vertex, std::string>> named;
  for (const auto& t : region_tokens) {
    const Vertex v = resolve_vertex(t, g);
    if (vertices.test(static_cast<std::size_t>(v))) throw InputError("vertex '" + t + "' listed twice in --region");
    vertices.set(static_cast<std::size_t>(v));
    lettered = lettered && !t.empty() && t[0] >= 'a' && t[0] <= 'z';
    named.emplace_back(v, t);
  }
  if (!labels_text.empty()) {
    const auto labels = split_list(labels_text);
    if (labels.size() != named.size()) throw InputError("--labels must name every --region vertex");
    for (std::size_t i = 0; i < named.size(); ++i) named[i].second = labels[i];
  } else if (!lettered) {
    for (auto& [v, name] : named) name = std::to_string(v + 1);
  }

  const Region region = [&] {
    if (boundary_text.empty()) return region_of(g, vertices);
    VertexSet boundary = g.empty_set();
    for (const auto& t : split_list(boundary_text)) {
      const Vertex v = resolve_vertex(t, g);
      if (!vertices.test(static_cast<std::size_t>(v))) throw InputError("boundary vertex '" + t + "' not in --region");
      boundary.set(static_cast<std::size_t>(v));
    }
    return region_with_boundary(g, vertices, boundary);
  }();

  std::vector<std::string> labels(region.width());
  for (std::size_t i = 0; i < region.width(); ++i)
    for (const auto& [v, name] : named)
      if (v == region.local_order()[i]) labels[i] = name;
  std::vector<int> all_positions(region.width());
  for (std::size_t i = 0; i < region.width(); ++i) all_positions[i] = static_cast<int>(i);

  const SolveConfig cfg = to_config(opts);
  log.info("discover: region of {} vertices, boundary {}", region.width(), region.boundary_positions().size());
  const BranchingAnalysis a = optimal_branching(region, cfg);
  const std::size_t bsize = region.boundary_positions().size();

  out << "region: " << join_labels(labels, all_positions) << '\n';
  out << "boundary: " << join_labels(labels, region.boundary_positions()) << '\n';
  out << "alpha tensor:\n";
  for (std::uint64_t key = 0; key < a.tensor.values.size(); ++key) {
    out << "  " << (bsize ? config_string(key, bsize) : "-") << "  ";
    if (a.tensor.finite(key))
      out << static_cast<int>(a.tensor.values[key]);
    else
      out << "-inf";
    out << (a.tensor.finite(key) && !a.reduced.finite(key) ? "  (pruned)" : "") << '\n';
  }
  out << "branching table (" << a.table.num_rows() << " rows):\n";
  for (std::size_t i = 0; i < a.table.num_rows(); ++i) {
    out << "  " << i + 1 << "  " << (bsize ? config_string(a.table.row_boundary[i], bsize) : "-") << "  ";
    for (std::size_t j = 0; j < a.table.rows[i].size(); ++j)
      out << (j ? ", " : "") << config_string(a.table.rows[i][j], region.width());
    out << '\n';
  }
  out << "candidates (" << a.candidates.size() << "):\n";
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    const auto& c = a.candidates[i];
    out << "  c" << i + 1 << "  " << to_string(c.clause, labels) << "  J={";
    bool first = true;
    c.coverage.for_each([&](std::size_t e) {
      out << (first ? "" : ",") << e + 1;
      first = false;
    });
    out << "}  Δρ=" << c.delta_rho << '\n';
  }
  out << render(a.result, labels);
  return 0;
}

int run_bench_command(const BenchSpec& spec, const std::string& out_path, std::ostream& out, spdlog::logger& log) {
  log.info("bench: {} sizes x {} trials, {} jobs", spec.sizes.size(), spec.trials, spec.jobs);
  const BenchReport report = run_bench(spec);
  if (out_path.empty()) {
    write_report_csv(out, report);
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write " + out_path);
  write_report_csv(file, report);
  for (const auto& s : report.sizes) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "n=%zu geomean=%.4f max=%llu\n", s.n, s.geomean,
                  static_cast<unsigned long long>(s.max_branches));
    out << buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "fitted_gamma=%.6f\n", report.fitted_gamma);
  out << buf;
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum independent set with optimal branching rules"};
  app.name("optbranch");
  app.require_subcommand(1);

  CommonOptions solve_opts;
  std::string solve_file;
  bool json = false;
  auto* solve = app.add_subcommand("solve", "Solve maximum independent set on a graph file");
  solve->add_option("file", solve_file, "Graph file")->required();
  solve->add_option("--format", solve_opts.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve->add_option("--seed", solve_opts.seed, "Seed for LP rounding");
  solve->add_flag("--json", json, "Print a JSON object");
  add_solver_options(solve, solve_opts);

  CommonOptions disc_opts;
  disc_opts.format = "edgelist";
  std::string disc_file, region_text, boundary_text, labels_text;
  auto* discover = app.add_subcommand("discover", "Derive the optimal branching rule for one region");
  discover->add_option("file", disc_file, "Graph file")->required();
  discover->add_option("--format", disc_opts.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
  discover->add_option("--region", region_text, "Region vertices, comma separated (1-based ids or letters)")
      ->required();
  discover->add_option("--boundary", boundary_text, "Boundary vertices; default: region vertices with outside neighbors");
  discover->add_option("--labels", labels_text, "Display names for the region vertices, in --region order");
  discover->add_option("--seed", disc_opts.seed, "Seed for LP rounding");
  add_solver_options(discover, disc_opts);

  CommonOptions bench_opts;
  std::string gen_name, sizes_text, out_path;
  BenchSpec spec;
  auto* bench = app.add_subcommand("bench", "Benchmark branch counts on random graphs");
  bench->add_option("--gen", gen_name, "Generator: 3rr, er, ksg or grid")->required();
  bench->add_option("--sizes", sizes_text, "Sizes as a:b:step")->required();
  bench->add_option("--trials", spec.trials, "Trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", spec.seed, "Master seed");
  bench->add_option("--out", out_path, "CSV report path; default: standard output");
  bench->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--degree", spec.generator.avg_degree, "Average degree for er");
  bench->add_option("--filling", spec.generator.filling, "Filling rate for ksg and grid");
  add_solver_options(bench, bench_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  auto log = make_logger(err);
  try {
    if (*solve) return run_solve(solve_file, solve_opts, json, out, *log);
    if (*discover) return run_discover(disc_file, disc_opts, region_text, boundary_text, labels_text, out, *log);
    spec.generator.kind = parse_generator_name(gen_name);
    spec.sizes = parse_size_range(sizes_text);
    spec.solver = to_config(bench_opts);
    return run_bench_command(spec, out_path, out, *log);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BenchFailure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace optbranch
