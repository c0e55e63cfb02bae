#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kvedom/graph.hpp"

namespace kvedom {

/// The oracle ran out of its node budget. Never accompanied by an answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

/// kDefaultBudget, unless KVEDOM_BUDGET holds a positive integer.
std::uint64_t default_budget();

struct OracleOptions {
  /// Ceiling on search nodes; default_budget() when unset.
  std::optional<std::uint64_t> budget;
  /// Split the search across OpenMP threads. Results do not depend on this.
  bool parallel = true;
};

struct OracleResult {
  /// Minimum cardinality; nullopt when no feasible set exists.
  std::optional<int> optimum;
  VertexSet witness;
  /// Search nodes visited over all cardinality rounds.
  std::uint64_t explored = 0;

  bool feasible() const { return optimum.has_value(); }
};

/// Minimum k-ve dominating set by exhaustive search.
OracleResult exact_kve(const Graph& g, int k, const OracleOptions& options = {});

/// Minimum ve-dominating set (k = 1).
OracleResult exact_ve(const Graph& g, const OracleOptions& options = {});

/// Minimum k-tuple dominating set: |N[v] ∩ D| >= k for every vertex v.
OracleResult exact_ktuple(const Graph& g, int k, const OracleOptions& options = {});

/// Some k-ve dominating set with at most `limit` vertices, if one exists.
std::optional<VertexSet> find_kve_within(const Graph& g, int k, int limit,
                                         const OracleOptions& options = {});

namespace oracle {

/// At least `demand` chosen vertices among `members`.
struct Constraint {
  std::vector<Vertex> members;
  int demand = 0;
};

/// Minimum-cardinality vertex set meeting every constraint.
struct Problem {
  int vertices = 0;
  std::vector<Constraint> constraints;

  /// Sorts members, drops demand-0 rows and merges rows with equal members.
  void normalize();
  /// Some row asks for more vertices than it has.
  bool trivially_infeasible() const;
};

Problem kve_problem(const Graph& g, int k);
Problem ktuple_problem(const Graph& g, int k);

struct SearchOutcome {
  std::optional<VertexSet> witness;
  std::uint64_t explored = 0;
};

namespace serial {
/// First solution of size <= limit in search order.
SearchOutcome search_within(const Problem& p, int limit, std::uint64_t budget);
}  // namespace serial

namespace omp {
/// Same answer and witness as serial::search_within; subtrees run in parallel.
SearchOutcome search_within(const Problem& p, int limit, std::uint64_t budget);
}  // namespace omp

/// Iterative deepening over the cardinality, starting at a packing lower bound.
OracleResult minimize(const Problem& p, const OracleOptions& options);

}  // namespace oracle

}  // namespace kvedom
