#include "optbranch/clause.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

#include "optbranch/errors.hpp"

namespace optbranch {

int Clause::literal_count() const { return std::popcount(mask); }

Clause single_cover(Config config, std::size_t width) {
  const Config full = width >= 64 ? ~Config{0} : (Config{1} << width) - 1;
  return Clause{full, config & full};
}

std::optional<Clause> intersection(const Clause& a, const Clause& b) {
  const Config mask = a.mask & b.mask & ~(a.values ^ b.values);
  if (mask == 0) return std::nullopt;
  return Clause{mask, a.values & mask};
}

bool covers(const Clause& c, std::span<const Config> row) {
  for (Config s : row)
    if (c.satisfied_by(s)) return true;
  return false;
}

DynBitset coverage(const Clause& c, const BranchingTable& t) {
  DynBitset out(t.num_rows());
  for (std::size_t i = 0; i < t.num_rows(); ++i)
    if (covers(c, t.rows[i])) out.set(i);
  return out;
}

std::vector<Clause> candidate_clauses(const BranchingTable& t) {
  std::vector<Clause> out;
  std::unordered_set<Clause, ClauseHash> seen;
  std::deque<Clause> work;
  for (const auto& row : t.rows) {
    for (Config s : row) {
      Clause c = single_cover(s, t.width);
      if (seen.insert(c).second) {
        out.push_back(c);
        work.push_back(c);
      }
    }
  }
  // A clause is only widened toward rows it does not cover yet; merging two
  // configurations of an already covered row cannot enlarge the coverage.
  while (!work.empty()) {
    const Clause c = work.front();
    work.pop_front();
    for (const auto& row : t.rows) {
      if (covers(c, row)) continue;
      for (Config s : row) {
        auto next = intersection(c, single_cover(s, t.width));
        if (next && seen.insert(*next).second) {
          out.push_back(*next);
          work.push_back(*next);
        }
      }
    }
  }
  return out;
}

VertexSet branch_removal(const Clause& c, const Region& r) {
  const Graph& host = r.host();
  VertexSet removed = r.to_host(c.mask);
  r.to_host(c.positives()).for_each([&](std::size_t v) { removed |= host.neighbor_set(static_cast<Vertex>(v)); });
  return removed;
}

long delta_rho(const Clause& c, const Region& r, Measure m) {
  long d = measure_drop(r.host(), branch_removal(c, r), m);
  if (d <= 0) throw InternalError("clause has non-positive measure reduction " + std::to_string(d));
  return d;
}

std::vector<CandidateClause> build_candidates(const BranchingTable& t, const Region& r, Measure m) {
  std::vector<CandidateClause> out;
  for (const Clause& c : candidate_clauses(t)) {
    long d = measure_drop(r.host(), branch_removal(c, r), m);
    if (d <= 0) continue;
    out.push_back(CandidateClause{c, coverage(c, t), d});
  }
  return out;
}

bool is_valid_rule(const DNF& d, const BranchingTable& t) {
  for (const auto& row : t.rows) {
    bool hit = false;
    for (const Clause& c : d.clauses) {
      if (covers(c, row)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::string> default_labels(std::size_t width) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < width; ++i) labels.push_back("#" + std::to_string(i + 1));
  return labels;
}

std::string to_string(const Clause& c, std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!((c.mask >> i) & 1U)) continue;
    if (!out.empty()) out += " ∧ ";
    if (!((c.values >> i) & 1U)) out += "¬";
    out += i < labels.size() ? labels[i] : "#" + std::to_string(i + 1);
  }
  return out;
}

std::string to_string(const DNF& d, std::span<const std::string> labels) {
  std::string out;
  for (const Clause& c : d.clauses) {
    if (!out.empty()) out += " ∨ ";
    out += "(" + to_string(c, labels) + ")";
  }
  return out;
}

std::string config_string(Config config, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if ((config >> i) & 1U) s[i] = '1';
  return s;
}

}  // namespace optbranch
