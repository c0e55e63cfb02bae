#include "kvedom/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>

#include "neighborhood.hpp"

namespace kvedom {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("KVEDOM_BUDGET")) {
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  return kDefaultBudget;
}

namespace oracle {

void Problem::normalize() {
  std::map<std::vector<Vertex>, int> merged;
  for (auto& row : constraints) {
    if (row.demand <= 0) continue;
    std::sort(row.members.begin(), row.members.end());
    row.members.erase(std::unique(row.members.begin(), row.members.end()), row.members.end());
    for (Vertex v : row.members) {
      if (v < 0 || v >= vertices) throw InputError("constraint member out of range");
    }
    auto& demand = merged[row.members];
    demand = std::max(demand, row.demand);
  }
  constraints.clear();
  for (auto& [members, demand] : merged) constraints.push_back({members, demand});
}

bool Problem::trivially_infeasible() const {
  return std::any_of(constraints.begin(), constraints.end(), [](const Constraint& c) {
    return static_cast<std::size_t>(c.demand) > c.members.size();
  });
}

Problem kve_problem(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  Problem p{g.order(), {}};
  p.constraints.reserve(g.size());
  for (const auto& e : g.edges()) {
    Constraint row{{}, k};
    detail::for_each_in_cover(g, e.u, e.v, [&row](Vertex x) { row.members.push_back(x); });
    p.constraints.push_back(std::move(row));
  }
  p.normalize();
  return p;
}

Problem ktuple_problem(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  Problem p{g.order(), {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    p.constraints.push_back({closed_neighborhood(g, v).members(), k});
  }
  p.normalize();
  return p;
}

namespace {

enum : std::uint8_t { kFree = 0, kIn = 1, kOut = 2 };

struct Compiled {
  int n = 0;
  std::vector<Constraint> rows;
  std::vector<std::vector<int>> rows_of;
  std::size_t words = 0;
  std::vector<std::uint64_t> membership;

  explicit Compiled(Problem p) : n(p.vertices) {
    p.normalize();
    rows = std::move(p.constraints);
    rows_of.resize(static_cast<std::size_t>(n));
    words = (rows.size() + 63) / 64;
    membership.assign(static_cast<std::size_t>(n) * words, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (Vertex v : rows[r].members) {
        rows_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(r));
        membership[static_cast<std::size_t>(v) * words + r / 64] |= std::uint64_t{1} << (r % 64);
      }
    }
  }

  // Every row containing a also contains b.
  bool covered_by(Vertex a, Vertex b) const {
    const auto* x = &membership[static_cast<std::size_t>(a) * words];
    const auto* y = &membership[static_cast<std::size_t>(b) * words];
    for (std::size_t w = 0; w < words; ++w) {
      if (x[w] & ~y[w]) return false;
    }
    return true;
  }

  int weight(Vertex v) const {
    return static_cast<int>(rows_of[static_cast<std::size_t>(v)].size());
  }
};

struct Cancelled {};

struct Task {
  std::vector<std::uint8_t> status;
  std::optional<VertexSet> solved;
};

// Shared between the workers of one parallel search.
struct Coordination {
  std::atomic<std::uint64_t> explored{0};
  std::atomic<std::size_t> first_success{~std::size_t{0}};
  std::atomic<bool> out_of_budget{false};
};

/**
 * Depth-first search for a set of at most `limit` vertices.
 *
 * Each node propagates forced choices (a row whose need equals its free
 * members takes all of them), prunes with a disjoint-row packing bound, then
 * branches on the row with the least slack: the i-th child takes the i-th
 * free member and excludes the ones before it. A member whose rows are a
 * subset of an earlier member's rows is skipped, since swapping it for that
 * member never breaks a row.
 */
class Searcher {
 public:
  Searcher(const Compiled& c, std::uint64_t budget, Coordination* shared = nullptr,
           std::size_t task = 0)
      : c_(c), budget_(budget), shared_(shared), task_(task) {
    load(std::vector<std::uint8_t>(static_cast<std::size_t>(c.n), kFree));
  }

  void load(const std::vector<std::uint8_t>& status) {
    status_.assign(static_cast<std::size_t>(c_.n), kFree);
    have_.assign(c_.rows.size(), 0);
    avail_.assign(c_.rows.size(), 0);
    for (std::size_t r = 0; r < c_.rows.size(); ++r) {
      avail_[r] = static_cast<int>(c_.rows[r].members.size());
    }
    chosen_ = 0;
    trail_.clear();
    dirty_.clear();
    for (Vertex v = 0; v < c_.n; ++v) {
      const auto st = status[static_cast<std::size_t>(v)];
      if (st != kFree) assign(v, st);
    }
    trail_.clear();
    dirty_.resize(c_.rows.size());
    for (std::size_t r = 0; r < c_.rows.size(); ++r) dirty_[r] = static_cast<int>(r);
  }

  std::uint64_t explored() const { return explored_; }
  const VertexSet& witness() const { return witness_; }

  /// Lower bound on the size of any completion of the loaded state.
  int lower_bound() {
    if (!propagate(c_.n)) return c_.n + 1;
    int row = -1;
    int bound = 0;
    evaluate(row, bound);
    return chosen_ + bound;
  }

  bool dfs(int limit) {
    tick();
    const auto mark = trail_.size();
    int row = -1;
    int bound = 0;
    if (!propagate(limit) || !evaluate(row, bound) || chosen_ + bound > limit) {
      undo(mark);
      return false;
    }
    if (row < 0) {
      record_witness();
      undo(mark);
      return true;
    }
    auto candidates = branch_candidates(row);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex x = candidates[i];
      if (dominated(candidates, i)) {
        assign(x, kOut);
        continue;
      }
      const auto before = trail_.size();
      assign(x, kIn);
      if (dfs(limit)) {
        undo(mark);
        return true;
      }
      undo(before);
      assign(x, kOut);
    }
    undo(mark);
    return false;
  }

  /// Same traversal as dfs(), cut at `depth`: unexplored nodes become tasks in
  /// visiting order. Stops at the first solved node.
  bool expand(int limit, int depth, std::vector<Task>& tasks) {
    if (depth == 0) {
      tasks.push_back({status_, std::nullopt});
      return false;
    }
    tick();
    const auto mark = trail_.size();
    int row = -1;
    int bound = 0;
    if (!propagate(limit) || !evaluate(row, bound) || chosen_ + bound > limit) {
      undo(mark);
      return false;
    }
    if (row < 0) {
      record_witness();
      tasks.push_back({{}, witness_});
      undo(mark);
      return true;
    }
    auto candidates = branch_candidates(row);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex x = candidates[i];
      if (dominated(candidates, i)) {
        assign(x, kOut);
        continue;
      }
      const auto before = trail_.size();
      assign(x, kIn);
      if (expand(limit, depth - 1, tasks)) {
        undo(mark);
        return true;
      }
      undo(before);
      assign(x, kOut);
    }
    undo(mark);
    return false;
  }

 private:
  static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

  void tick() {
    ++explored_;
    if (!shared_) {
      if (explored_ > budget_) throw BudgetExceeded("oracle budget exceeded");
      return;
    }
    if ((explored_ & 255) == 0) {
      const auto total = shared_->explored.fetch_add(256) + 256;
      if (total > budget_) {
        shared_->out_of_budget = true;
        throw BudgetExceeded("oracle budget exceeded");
      }
      if (shared_->out_of_budget || task_ > shared_->first_success.load()) throw Cancelled{};
    }
  }

  void assign(Vertex v, std::uint8_t state) {
    status_[at(v)] = state;
    trail_.push_back(v);
    if (state == kIn) ++chosen_;
    for (int r : c_.rows_of[at(v)]) {
      --avail_[static_cast<std::size_t>(r)];
      if (state == kIn) {
        ++have_[static_cast<std::size_t>(r)];
      } else {
        dirty_.push_back(r);
      }
    }
  }

  void undo(std::size_t mark) {
    dirty_.clear();
    while (trail_.size() > mark) {
      const Vertex v = trail_.back();
      trail_.pop_back();
      const bool was_in = status_[at(v)] == kIn;
      if (was_in) --chosen_;
      for (int r : c_.rows_of[at(v)]) {
        ++avail_[static_cast<std::size_t>(r)];
        if (was_in) --have_[static_cast<std::size_t>(r)];
      }
      status_[at(v)] = kFree;
    }
  }

  // Taking a vertex leaves every row's slack unchanged, so only exclusions can
  // tighten or break a row; those rows sit in dirty_.
  bool propagate(int limit) {
    while (!dirty_.empty()) {
      const auto r = static_cast<std::size_t>(dirty_.back());
      dirty_.pop_back();
      const int need = c_.rows[r].demand - have_[r];
      if (need <= 0) continue;
      if (need > avail_[r]) {
        dirty_.clear();
        return false;
      }
      if (need == avail_[r]) {
        for (Vertex m : c_.rows[r].members) {
          if (status_[at(m)] == kFree) assign(m, kIn);
        }
      }
    }
    return chosen_ <= limit;
  }

  // Picks the open row with the least slack (-1 when all rows are met) and a
  // lower bound on further picks. False if some row cannot be met.
  bool evaluate(int& row, int& bound) {
    open_.clear();
    row = -1;
    int best_slack = 0;
    int max_need = 0;
    for (std::size_t r = 0; r < c_.rows.size(); ++r) {
      const int need = c_.rows[r].demand - have_[r];
      if (need <= 0) continue;
      if (need > avail_[r]) return false;
      const int slack = avail_[r] - need;
      if (row < 0 || slack < best_slack ||
          (slack == best_slack && avail_[r] < avail_[static_cast<std::size_t>(row)])) {
        row = static_cast<int>(r);
        best_slack = slack;
      }
      max_need = std::max(max_need, need);
      open_.emplace_back(avail_[r], static_cast<int>(r));
    }
    std::sort(open_.begin(), open_.end());
    if (seen_.size() != status_.size()) seen_.assign(status_.size(), 0);
    ++epoch_;
    int packed = 0;
    for (const auto& [avail, r] : open_) {
      const auto& members = c_.rows[static_cast<std::size_t>(r)].members;
      bool clash = false;
      for (Vertex m : members) {
        if (status_[at(m)] == kFree && seen_[at(m)] == epoch_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (Vertex m : members) {
        if (status_[at(m)] == kFree) seen_[at(m)] = epoch_;
      }
      packed += c_.rows[static_cast<std::size_t>(r)].demand - have_[static_cast<std::size_t>(r)];
    }
    bound = std::max(packed, max_need);
    return true;
  }

  std::vector<Vertex> branch_candidates(int row) const {
    std::vector<Vertex> out;
    for (Vertex m : c_.rows[static_cast<std::size_t>(row)].members) {
      if (status_[at(m)] == kFree) out.push_back(m);
    }
    std::stable_sort(out.begin(), out.end(),
                     [this](Vertex a, Vertex b) { return c_.weight(a) > c_.weight(b); });
    return out;
  }

  bool dominated(const std::vector<Vertex>& candidates, std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j) {
      if (c_.covered_by(candidates[i], candidates[j])) return true;
    }
    return false;
  }

  void record_witness() {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < c_.n; ++v) {
      if (status_[at(v)] == kIn) members.push_back(v);
    }
    witness_ = VertexSet(std::move(members));
  }

  const Compiled& c_;
  std::uint64_t budget_;
  Coordination* shared_;
  std::size_t task_;

  std::vector<std::uint8_t> status_;
  std::vector<int> have_;
  std::vector<int> avail_;
  int chosen_ = 0;
  std::vector<Vertex> trail_;
  std::vector<int> dirty_;
  std::vector<std::pair<int, int>> open_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t epoch_ = 0;
  std::uint64_t explored_ = 0;
  VertexSet witness_;
};

SearchOutcome search_serial(const Compiled& c, int limit, std::uint64_t budget) {
  Searcher s(c, budget);
  SearchOutcome out;
  if (s.dfs(limit)) out.witness = s.witness();
  out.explored = s.explored();
  return out;
}

SearchOutcome search_parallel(const Compiled& c, int limit, std::uint64_t budget) {
  const int threads = omp_get_max_threads();
  if (threads <= 1) return search_serial(c, limit, budget);

  // Cut the serial traversal into ordered subtrees; the first subtree in
  // order holding a solution gives exactly the serial witness.
  std::vector<Task> tasks;
  std::uint64_t expanded = 0;
  const std::size_t target = static_cast<std::size_t>(threads) * 8;
  for (int depth = 1; depth <= 16; ++depth) {
    Searcher s(c, budget);
    std::vector<Task> next;
    s.expand(limit, depth, next);
    expanded += s.explored();
    const bool resolved = std::all_of(next.begin(), next.end(),
                                      [](const Task& t) { return t.solved.has_value(); });
    tasks = std::move(next);
    if (tasks.size() >= target || resolved || (!tasks.empty() && tasks.front().solved)) break;
  }

  Coordination shared;
  shared.explored = expanded;
  std::vector<std::optional<VertexSet>> found(tasks.size());
  const auto count = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long t = 0; t < count; ++t) {
    const auto i = static_cast<std::size_t>(t);
    if (shared.out_of_budget || i > shared.first_success.load()) continue;
    if (tasks[i].solved) {
      found[i] = tasks[i].solved;
    } else {
      Searcher s(c, budget, &shared, i);
      s.load(tasks[i].status);
      try {
        if (s.dfs(limit)) found[i] = s.witness();
      } catch (const Cancelled&) {
      } catch (const BudgetExceeded&) {
        shared.out_of_budget = true;
      }
      shared.explored.fetch_add(s.explored() & 255);
    }
    if (found[i]) {
      auto current = shared.first_success.load();
      while (i < current && !shared.first_success.compare_exchange_weak(current, i)) {
      }
    }
  }
  if (shared.out_of_budget) throw BudgetExceeded("oracle budget exceeded");

  SearchOutcome out;
  out.explored = shared.explored.load();
  const auto first = shared.first_success.load();
  if (first < found.size()) out.witness = found[first];
  return out;
}

}  // namespace

namespace serial {
SearchOutcome search_within(const Problem& p, int limit, std::uint64_t budget) {
  Compiled c(p);
  return search_serial(c, limit, budget);
}
}  // namespace serial

namespace omp {
SearchOutcome search_within(const Problem& p, int limit, std::uint64_t budget) {
  Compiled c(p);
  return search_parallel(c, limit, budget);
}
}  // namespace omp

OracleResult minimize(const Problem& p, const OracleOptions& options) {
  OracleResult result;
  Compiled c(p);
  Problem normalized{c.n, c.rows};
  if (normalized.trivially_infeasible()) return result;

  const std::uint64_t budget = options.budget.value_or(default_budget());
  int limit = Searcher(c, budget).lower_bound();
  for (; limit <= c.n; ++limit) {
    if (result.explored >= budget) throw BudgetExceeded("oracle budget exceeded");
    const auto remaining = budget - result.explored;
    auto round = options.parallel ? search_parallel(c, limit, remaining)
                                  : search_serial(c, limit, remaining);
    result.explored += round.explored;
    if (round.witness) {
      result.optimum = limit;
      result.witness = std::move(*round.witness);
      return result;
    }
  }
  throw std::logic_error("feasible cover problem without a solution");
}

}  // namespace oracle

OracleResult exact_kve(const Graph& g, int k, const OracleOptions& options) {
  return oracle::minimize(oracle::kve_problem(g, k), options);
}

OracleResult exact_ve(const Graph& g, const OracleOptions& options) {
  return exact_kve(g, 1, options);
}

OracleResult exact_ktuple(const Graph& g, int k, const OracleOptions& options) {
  return oracle::minimize(oracle::ktuple_problem(g, k), options);
}

std::optional<VertexSet> find_kve_within(const Graph& g, int k, int limit,
                                         const OracleOptions& options) {
  auto problem = oracle::kve_problem(g, k);
  if (problem.trivially_infeasible()) return std::nullopt;
  const std::uint64_t budget = options.budget.value_or(default_budget());
  auto out = options.parallel ? oracle::omp::search_within(problem, limit, budget)
                              : oracle::serial::search_within(problem, limit, budget);
  return out.witness;
}

}  // namespace kvedom
