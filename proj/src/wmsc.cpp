#include "optbranch/wmsc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>

#include "optbranch/errors.hpp"

namespace optbranch {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Weights span many orders of magnitude (gamma^-delta), so ties are relative.
double tie_tolerance(double value) { return 1e-12 * std::abs(value); }

double total_weight(const WmscInstance& inst, const std::vector<std::size_t>& chosen) {
  double w = 0.0;
  for (std::size_t i : chosen) w += inst.weights[i];
  return w;
}

// Greedy completion: repeatedly add the set with the smallest weight per
// newly covered element (ties to the lowest index).
void greedy_complete(const WmscInstance& inst, const std::vector<std::size_t>& pool, DynBitset& uncovered,
                     std::vector<std::size_t>& chosen) {
  while (uncovered.any()) {
    std::size_t best = pool.size();
    double best_ratio = kInf;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      std::size_t gain = inst.sets[pool[p]].intersection_count(uncovered);
      if (gain == 0) continue;
      double ratio = inst.weights[pool[p]] / static_cast<double>(gain);
      if (ratio < best_ratio) {
        best_ratio = ratio;
        best = p;
      }
    }
    if (best == pool.size()) throw InfeasibleError("set cover: universe cannot be covered");
    chosen.push_back(pool[best]);
    uncovered -= inst.sets[pool[best]];
  }
}

// Drops sets that are not needed for coverage, heaviest first.
void remove_redundant(const WmscInstance& inst, std::vector<std::size_t>& chosen) {
  std::vector<int> hits(inst.universe_size, 0);
  for (std::size_t i : chosen) inst.sets[i].for_each([&](std::size_t e) { ++hits[e]; });
  std::vector<std::size_t> order = chosen;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (inst.weights[a] != inst.weights[b]) return inst.weights[a] > inst.weights[b];
    return a > b;
  });
  std::vector<std::size_t> dropped;
  for (std::size_t i : order) {
    bool needed = false;
    inst.sets[i].for_each([&](std::size_t e) {
      if (hits[e] == 1) needed = true;
    });
    if (needed) continue;
    inst.sets[i].for_each([&](std::size_t e) { --hits[e]; });
    dropped.push_back(i);
  }
  std::erase_if(chosen, [&](std::size_t i) { return std::find(dropped.begin(), dropped.end(), i) != dropped.end(); });
  std::sort(chosen.begin(), chosen.end());
}

// Revised simplex with an explicit basis inverse for
//   min c.x  s.t.  A x - s = 1,  x, s >= 0
// over a growing set of columns. Every row has an artificial column, so the
// all-artificial basis is a feasible start. Pricing is relative to each
// column's own cost scale because costs can span many magnitudes.
class CoverMaster {
 public:
  static constexpr std::size_t kSlack = static_cast<std::size_t>(-1);

  // Row r's artificial column costs artificial_cost[r] and carries tag
  // artificial_tag + r; its slack is priced relative to slack_scale[r].
  CoverMaster(const std::vector<double>& artificial_cost, const std::vector<double>& slack_scale,
              std::size_t artificial_tag)
      : m_(artificial_cost.size()), binv_(m_ * m_, 0.0), xb_(m_, 1.0), y_(m_, 0.0) {
    for (std::size_t r = 0; r < m_; ++r)
      add({r}, 1.0, artificial_cost[r], artificial_cost[r], artificial_tag + r);
    for (std::size_t r = 0; r < m_; ++r) add({r}, -1.0, 0.0, slack_scale[r], kSlack);
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      basis_[r] = r;
      cols_[r].basic = true;
      binv_[r * m_ + r] = 1.0;
    }
  }

  void add_structural(std::vector<std::size_t> rows, double cost, std::size_t tag) {
    add(std::move(rows), 1.0, cost, cost, tag);
  }

  void solve() {
    const std::size_t limit = 100 * (cols_.size() + m_) + 1000;
    bool bland = false;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      if (since_refactor_ >= 64) refactor();
      compute_duals();
      const std::size_t enter = choose_entering(bland);
      if (enter == cols_.size()) return;
      std::vector<double> alpha(m_, 0.0);
      for (std::size_t r : cols_[enter].rows)
        for (std::size_t k = 0; k < m_; ++k) alpha[k] += cols_[enter].coef * binv_[k * m_ + r];

      // Ratio test; ties go to the lowest basic column (Bland).
      std::size_t leave = m_;
      double step = kInf;
      for (std::size_t k = 0; k < m_; ++k) {
        if (alpha[k] <= kSimplexTolerance) continue;
        const double t = std::max(0.0, xb_[k]) / alpha[k];
        if (leave == m_ || t < step - kSimplexTolerance ||
            (t <= step + kSimplexTolerance && basis_[k] < basis_[leave])) {
          step = leave == m_ ? t : std::min(step, t);
          leave = k;
        }
      }
      if (leave == m_) throw NumericError("simplex: unbounded direction in a covering problem");
      for (std::size_t k = 0; k < m_; ++k) xb_[k] -= step * alpha[k];
      xb_[leave] = step;
      const double p = alpha[leave];
      for (std::size_t c = 0; c < m_; ++c) binv_[leave * m_ + c] /= p;
      for (std::size_t k = 0; k < m_; ++k) {
        if (k == leave || alpha[k] == 0.0) continue;
        for (std::size_t c = 0; c < m_; ++c) binv_[k * m_ + c] -= alpha[k] * binv_[leave * m_ + c];
      }
      cols_[basis_[leave]].basic = false;
      cols_[enter].basic = true;
      basis_[leave] = enter;
      ++since_refactor_;
      ++pivots_;
      bland = step <= kSimplexTolerance;
    }
    throw NumericError("simplex: no convergence within " + std::to_string(limit) + " iterations");
  }

  /// Row duals in the master's cost scale, as of the last solve().
  const std::vector<double>& duals() const { return y_; }

  /// (tag, value) of every basic column.
  std::vector<std::pair<std::size_t, double>> basic_values() const {
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t k = 0; k < m_; ++k) out.emplace_back(cols_[basis_[k]].tag, xb_[k]);
    return out;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  struct Column {
    std::vector<std::size_t> rows;
    double coef;
    double cost;
    double price_scale;
    std::size_t tag;
    bool basic = false;
  };

  void add(std::vector<std::size_t> rows, double coef, double cost, double price_scale, std::size_t tag) {
    cols_.push_back(Column{std::move(rows), coef, cost, price_scale > 0.0 ? price_scale : 1.0, tag});
  }

  void compute_duals() {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (std::size_t k = 0; k < m_; ++k) {
      const double c = cols_[basis_[k]].cost;
      if (c == 0.0) continue;
      for (std::size_t r = 0; r < m_; ++r) y_[r] += c * binv_[k * m_ + r];
    }
  }

  // Dantzig on the relative reduced cost; first improving column under Bland.
  std::size_t choose_entering(bool bland) const {
    std::size_t best = cols_.size();
    double best_score = kSimplexTolerance;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const Column& col = cols_[j];
      if (col.basic) continue;
      double d = col.cost;
      for (std::size_t r : col.rows) d -= col.coef * y_[r];
      const double score = -d / col.price_scale;
      if (score <= kSimplexTolerance) continue;
      if (bland) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  // Rebuilds the inverse and the basic values from scratch (Gauss-Jordan
  // with partial pivoting) to stop round-off from accumulating.
  void refactor() {
    since_refactor_ = 0;
    std::vector<double> b(m_ * m_, 0.0);
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t r : cols_[basis_[k]].rows) b[r * m_ + k] = cols_[basis_[k]].coef;
    std::vector<double> inv(m_ * m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) inv[r * m_ + r] = 1.0;
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < m_; ++r)
        if (std::abs(b[r * m_ + c]) > std::abs(b[piv * m_ + c])) piv = r;
      if (std::abs(b[piv * m_ + c]) < 1e-12) throw NumericError("simplex: singular basis");
      if (piv != c)
        for (std::size_t k = 0; k < m_; ++k) {
          std::swap(b[piv * m_ + k], b[c * m_ + k]);
          std::swap(inv[piv * m_ + k], inv[c * m_ + k]);
        }
      const double p = b[c * m_ + c];
      for (std::size_t k = 0; k < m_; ++k) {
        b[c * m_ + k] /= p;
        inv[c * m_ + k] /= p;
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == c) continue;
        const double f = b[r * m_ + c];
        if (f == 0.0) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          b[r * m_ + k] -= f * b[c * m_ + k];
          inv[r * m_ + k] -= f * inv[c * m_ + k];
        }
      }
    }
    binv_ = std::move(inv);
    for (std::size_t k = 0; k < m_; ++k) {
      double s = 0.0;
      for (std::size_t r = 0; r < m_; ++r) s += binv_[k * m_ + r];
      xb_[k] = s;
    }
  }

  std::size_t m_;
  std::vector<Column> cols_;
  std::vector<std::size_t> basis_;
  std::vector<double> binv_, xb_, y_;
  std::size_t since_refactor_ = 0;
  std::size_t pivots_ = 0;
};

struct Relaxation {
  /// Lagrangian lower bound on the weight of any cover of the rows.
  double bound = -kInf;
  /// The Lagrangian value of the final duals, which reduced() refers to.
  double final_bound = -kInf;
  /// The bound reached the cutoff before the LP was optimal.
  bool cut_off = false;
  /// Some row is still covered by its artificial column.
  bool artificial = false;
  /// Sets with a positive LP value, in basis order.
  std::vector<std::pair<std::size_t, double>> support;
  std::size_t pivots = 0;
};

// LP relaxation of "cover `uncovered` using `usable`" by column generation.
// The bound is sum(y) + sum(min(0, reduced cost)) for the current duals y,
// which is valid for any y >= 0, so an early stop still gives a bound.
class ColumnGeneration {
 public:
  explicit ColumnGeneration(const WmscInstance& inst)
      : inst_(inst), in_master_(inst.sets.size(), 0), yfull_(inst.universe_size, 0.0), reduced_(inst.sets.size(), 0.0) {}

  // `usable` must cover every element of `uncovered`.
  Relaxation solve(const DynBitset& uncovered, const std::vector<std::size_t>& usable,
                   const std::vector<std::size_t>& warm, double cutoff, std::size_t max_rounds) {
    std::vector<std::size_t> rows = uncovered.to_vector();
    std::vector<std::size_t> local(inst_.universe_size, 0);
    for (std::size_t k = 0; k < rows.size(); ++k) local[rows[k]] = k;

    std::vector<std::size_t> cheapest(rows.size(), inst_.sets.size());
    double scale = 0.0;
    for (std::size_t i : usable) {
      scale = std::max(scale, inst_.weights[i]);
      (inst_.sets[i] & uncovered).for_each([&](std::size_t e) {
        std::size_t& c = cheapest[local[e]];
        if (c == inst_.sets.size() || inst_.weights[i] < inst_.weights[c]) c = i;
      });
    }
    // An artificial costs twice the cheapest real cover of its row, so it is
    // never needed at an optimum yet always gives a feasible start.
    std::vector<double> art_cost(rows.size()), slack_scale(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      slack_scale[k] = inst_.weights[cheapest[k]] / scale;
      art_cost[k] = 2.0 * slack_scale[k];
    }
    CoverMaster master(art_cost, slack_scale, inst_.sets.size());
    std::vector<std::size_t> added;
    auto add_column = [&](std::size_t i) {
      if (in_master_[i]) return;
      in_master_[i] = 1;
      added.push_back(i);
      std::vector<std::size_t> r;
      (inst_.sets[i] & uncovered).for_each([&](std::size_t e) { r.push_back(local[e]); });
      master.add_structural(std::move(r), inst_.weights[i] / scale, i);
    };
    for (std::size_t i : warm)
      if (inst_.sets[i].intersects(uncovered)) add_column(i);
    for (std::size_t c : cheapest) add_column(c);

    Relaxation out;
    struct Cleanup {
      ColumnGeneration& self;
      const std::vector<std::size_t>& rows;
      const std::vector<std::size_t>& added;
      ~Cleanup() {
        for (std::size_t e : rows) self.yfull_[e] = 0.0;
        for (std::size_t i : added) self.in_master_[i] = 0;
      }
    } cleanup{*this, rows, added};

    bool optimal = false;
    for (std::size_t round = 0; round < max_rounds; ++round) {
      master.solve();
      const auto& y = master.duals();
      double lagrangian = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        yfull_[rows[k]] = std::max(0.0, y[k]) * scale;
        lagrangian += yfull_[rows[k]];
      }
      std::vector<std::pair<double, std::size_t>> entering;
      for (std::size_t i : usable) {
        double rc = inst_.weights[i];
        inst_.sets[i].for_each([&](std::size_t e) { rc -= yfull_[e]; });
        reduced_[i] = rc;
        if (rc < 0.0) lagrangian += rc;
        if (!in_master_[i] && rc < -kSimplexTolerance * inst_.weights[i])
          entering.emplace_back(rc / inst_.weights[i], i);
      }
      out.bound = std::max(out.bound, lagrangian);
      out.final_bound = lagrangian;
      if (out.bound >= cutoff) {
        out.cut_off = true;
        break;
      }
      if (entering.empty()) {
        optimal = true;
        break;
      }
      const std::size_t take = std::min<std::size_t>(entering.size(), 32);
      std::partial_sort(entering.begin(), entering.begin() + static_cast<std::ptrdiff_t>(take), entering.end());
      for (std::size_t k = 0; k < take; ++k) add_column(entering[k].second);
    }
    out.pivots = master.pivots();
    if (!optimal) return out;
    for (const auto& [tag, x] : master.basic_values()) {
      if (tag == CoverMaster::kSlack || x <= kSimplexTolerance) continue;
      if (tag >= inst_.sets.size()) {
        // Equivalent to the cheapest real set covering that row.
        out.artificial = true;
        continue;
      }
      out.support.emplace_back(tag, x);
    }
    return out;
  }

  /// Reduced cost of usable set i under the last duals of solve().
  double reduced(std::size_t i) const { return reduced_[i]; }

 private:
  const WmscInstance& inst_;
  std::vector<char> in_master_;
  std::vector<double> yfull_;
  std::vector<double> reduced_;
};

// Branch-and-bound with LP bounds. Every node solves its relaxation by column
// generation, fixes out sets whose reduced cost alone exceeds the gap, and
// branches on the set with the largest fractional value: first forced in,
// then excluded. Ties between optimal covers follow this search order.
class ExactSearch {
 public:
  ExactSearch(const WmscInstance& inst, std::vector<std::size_t> pool)
      : inst_(inst), pool_(std::move(pool)), excluded_(inst.sets.size(), 0), lp_(inst) {}

  void seed(std::vector<std::size_t> chosen) {
    best_ = total_weight(inst_, chosen);
    best_chosen_ = std::move(chosen);
  }

  void run() {
    DynBitset uncovered(inst_.universe_size);
    uncovered.set_all();
    dfs(uncovered, 0.0, {});
  }

  std::vector<std::size_t> best_chosen() const { return best_chosen_; }

 private:
  static constexpr std::size_t kMaxRoundsPerNode = 500;

  double cutoff(double cost) const { return best_ - tie_tolerance(best_) - cost; }

  void record(double total, std::vector<std::size_t> chosen) {
    if (total < best_ - tie_tolerance(best_)) {
      best_ = total;
      best_chosen_ = std::move(chosen);
    }
  }

  void dfs(const DynBitset& uncovered, double cost, const std::vector<std::size_t>& warm) {
    if (uncovered.none()) {
      record(cost, chosen_);
      return;
    }
    std::vector<std::size_t> usable;
    DynBitset reachable(inst_.universe_size);
    for (std::size_t i : pool_) {
      if (excluded_[i] || !inst_.sets[i].intersects(uncovered)) continue;
      usable.push_back(i);
      reachable |= inst_.sets[i];
    }
    if (!uncovered.is_subset_of(reachable)) return;

    std::vector<std::size_t> warm_usable;
    for (std::size_t i : warm)
      if (!excluded_[i]) warm_usable.push_back(i);
    Relaxation lp;
    bool have_lp = true;
    try {
      lp = lp_.solve(uncovered, usable, warm_usable, cutoff(cost), kMaxRoundsPerNode);
    } catch (const NumericError&) {
      have_lp = false;  // branch without a bound
    }
    if (lp.cut_off) return;

    std::vector<std::size_t> fixed;
    if (have_lp && lp.final_bound > -kInf)
      for (std::size_t i : usable)
        if (lp.final_bound + std::max(0.0, lp_.reduced(i)) >= cutoff(cost)) {
          excluded_[i] = 1;
          fixed.push_back(i);
        }

    std::size_t branch = inst_.sets.size();
    double branch_x = 0.0;
    bool integral = have_lp && !lp.support.empty() && !lp.artificial;
    std::vector<std::size_t> support;
    for (const auto& [i, x] : lp.support) {
      support.push_back(i);
      if (x >= 1.0 - 1e-9) continue;
      integral = false;
      if (!excluded_[i] && (x > branch_x || (x == branch_x && i < branch))) {
        branch_x = x;
        branch = i;
      }
    }
    if (integral) {
      // An integral relaxation optimum is optimal for the whole subtree.
      std::vector<std::size_t> chosen = chosen_;
      chosen.insert(chosen.end(), support.begin(), support.end());
      record(cost + total_weight(inst_, support), std::move(chosen));
    } else {
      if (branch == inst_.sets.size()) {
        // No usable fractional set: branch on the cheapest set covering the
        // first uncovered element.
        const std::size_t first = uncovered.find_first();
        for (std::size_t i : usable)
          if (!excluded_[i] && inst_.sets[i].test(first) &&
              (branch == inst_.sets.size() || inst_.weights[i] < inst_.weights[branch]))
            branch = i;
      }
      if (branch != inst_.sets.size()) {
        std::vector<std::size_t> next_warm;
        for (std::size_t i : support)
          if (i != branch) next_warm.push_back(i);
        chosen_.push_back(branch);
        dfs(uncovered - inst_.sets[branch], cost + inst_.weights[branch], next_warm);
        chosen_.pop_back();
        excluded_[branch] = 1;
        dfs(uncovered, cost, next_warm);
        excluded_[branch] = 0;
      }
    }
    for (std::size_t i : fixed) excluded_[i] = 0;
  }

  const WmscInstance& inst_;
  std::vector<std::size_t> pool_;
  std::vector<char> excluded_;
  ColumnGeneration lp_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_chosen_;
  double best_ = kInf;
};

}  // namespace

void validate(const WmscInstance& inst) {
  if (inst.sets.size() != inst.weights.size()) throw InputError("set cover: sets and weights differ in length");
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    if (inst.sets[i].size() != inst.universe_size)
      throw InputError("set cover: set " + std::to_string(i) + " has the wrong universe size");
    if (!(inst.weights[i] > 0.0) || !std::isfinite(inst.weights[i]))
      throw InputError("set cover: weight " + std::to_string(i) + " must be positive and finite");
  }
  DynBitset all(inst.universe_size);
  for (const auto& s : inst.sets) all |= s;
  if (all.count() != inst.universe_size) throw InfeasibleError("set cover: union of the sets misses the universe");
}

bool is_cover(const WmscInstance& inst, const std::vector<std::size_t>& chosen) {
  DynBitset all(inst.universe_size);
  for (std::size_t i : chosen) {
    if (i >= inst.sets.size()) return false;
    all |= inst.sets[i];
  }
  return all.count() == inst.universe_size;
}

std::vector<std::size_t> undominated_sets(const WmscInstance& inst) {
  // One representative per distinct coverage set.
  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> rep;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    if (inst.sets[i].none()) continue;
    auto [it, fresh] = rep.try_emplace(inst.sets[i], i);
    if (!fresh && inst.weights[i] < inst.weights[it->second]) it->second = i;
  }
  std::vector<std::size_t> reps;
  reps.reserve(rep.size());
  for (const auto& [set, i] : rep) reps.push_back(i);
  std::sort(reps.begin(), reps.end());

  std::vector<std::size_t> counts(inst.sets.size());
  for (std::size_t i : reps) counts[i] = inst.sets[i].count();
  std::vector<std::size_t> kept;
  for (std::size_t i : reps) {
    bool dominated = false;
    for (std::size_t j : reps) {
      if (j == i || counts[j] <= counts[i] || inst.weights[j] > inst.weights[i]) continue;
      if (inst.sets[i].is_subset_of(inst.sets[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  return kept;
}

WmscSolution solve_exact(const WmscInstance& inst) {
  validate(inst);
  std::vector<std::size_t> pool = undominated_sets(inst);

  DynBitset uncovered(inst.universe_size);
  uncovered.set_all();
  std::vector<std::size_t> greedy;
  greedy_complete(inst, pool, uncovered, greedy);
  remove_redundant(inst, greedy);

  ExactSearch search(inst, pool);
  search.seed(greedy);
  search.run();

  WmscSolution sol;
  sol.chosen = search.best_chosen();
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.objective = total_weight(inst, sol.chosen);
  sol.exact = true;
  return sol;
}

LpSolution solve_lp_relaxation(const WmscInstance& inst) {
  validate(inst);
  const std::vector<std::size_t> columns = undominated_sets(inst);
  DynBitset all(inst.universe_size);
  all.set_all();
  ColumnGeneration cg(inst);
  const Relaxation lp = cg.solve(all, columns, {}, kInf, std::numeric_limits<std::size_t>::max());
  if (lp.artificial) throw NumericError("simplex: relaxation kept an artificial column");
  LpSolution out;
  out.pivots = lp.pivots;
  out.x.assign(inst.sets.size(), 0.0);
  for (const auto& [i, x] : lp.support) {
    out.x[i] = std::min(x, 1.0);
    out.objective += out.x[i] * inst.weights[i];
  }
  return out;
}

WmscSolution solve_lp(const WmscInstance& inst, std::uint64_t seed, int trials) {
  LpSolution lp = solve_lp_relaxation(inst);
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < inst.sets.size(); ++i)
    if (inst.sets[i].any()) pool.push_back(i);

  WmscSolution best;
  best.objective = kInf;
  for (int trial = 0; trial < std::max(trials, 1); ++trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
    std::vector<std::size_t> chosen;
    DynBitset uncovered(inst.universe_size);
    uncovered.set_all();
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      double u = uniform01(rng);
      if (lp.x[i] > kSimplexTolerance && u < lp.x[i]) {
        chosen.push_back(i);
        uncovered -= inst.sets[i];
      }
    }
    greedy_complete(inst, pool, uncovered, chosen);
    std::sort(chosen.begin(), chosen.end());
    remove_redundant(inst, chosen);
    double w = total_weight(inst, chosen);
    if (w < best.objective - tie_tolerance(w)) {
      best.chosen = std::move(chosen);
      best.objective = w;
    }
  }
  best.exact = false;
  return best;
}

}  // namespace optbranch
