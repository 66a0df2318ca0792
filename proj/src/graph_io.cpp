#include "optbranch/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_integer(std::string_view token, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line_no);
  return value;
}

struct RawEdge {
  long u, v;
  std::size_t line;
};

Graph build(long n, const std::vector<RawEdge>& raw) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    for (long x : {e.u, e.v})
      if (x < 1 || x > n)
        throw RangeError("line " + std::to_string(e.line) + ": vertex " + std::to_string(x) + " outside 1.." +
                         std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(e.u - 1), static_cast<Vertex>(e.v - 1));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

void check_self_loop(long u, long v, std::size_t line_no) {
  if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
}

Graph parse_edge_list(std::istream& in) {
  std::optional<long> declared;
  std::vector<RawEdge> raw;
  long largest = 0;
  bool seen_data = false;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto tokens = tokenize(view);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && !seen_data) {
      long n = parse_integer(tokens[0], line_no);
      if (n < 0) throw ParseError("negative vertex count", line_no);
      declared = n;
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (tokens.size() != 2) throw ParseError("expected 'u v'", line_no);
    long u = parse_integer(tokens[0], line_no);
    long v = parse_integer(tokens[1], line_no);
    check_self_loop(u, v, line_no);
    raw.push_back({u, v, line_no});
    largest = std::max({largest, u, v});
  }
  return build(declared.value_or(largest), raw);
}

Graph parse_dimacs(std::istream& in) {
  std::optional<long> n;
  std::vector<RawEdge> raw;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n) throw ParseError("duplicate 'p' header", line_no);
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        throw ParseError("expected 'p edge <n> <m>'", line_no);
      n = parse_integer(tokens[2], line_no);
      if (*n < 0 || parse_integer(tokens[3], line_no) < 0) throw ParseError("negative size in header", line_no);
      continue;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError("edge before 'p' header", line_no);
      if (tokens.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no);
      long u = parse_integer(tokens[1], line_no);
      long v = parse_integer(tokens[2], line_no);
      check_self_loop(u, v, line_no);
      raw.push_back({u, v, line_no});
      continue;
    }
    throw ParseError("unknown line type '" + std::string(tokens[0]) + "'", line_no);
  }
  if (!n) throw ParseError("missing 'p edge' header", 1);
  return build(*n, raw);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Dimacs ? parse_dimacs(in) : parse_edge_list(in);
}

Graph parse_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_graph(in, format);
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace optbranch
