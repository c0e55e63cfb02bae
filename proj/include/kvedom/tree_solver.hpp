#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kvedom/graph.hpp"

namespace kvedom {

enum class Label : std::uint8_t { B, R };

/**
 * Vertex labels and per-edge demands for the (s,t)-domination problem on a tree.
 *
 * A set D is (s,t)-dominating when it contains every R vertex and, for every
 * edge e = uv, |(N[u] ∪ N[v]) ∩ D| >= s[e]. Demands are indexed by EdgeId of
 * the tree's graph. All-B labels with s ≡ k is plain k-ve domination.
 */
struct STLabeling {
  std::vector<Label> t;
  std::vector<int> s;

  static STLabeling uniform(const Graph& g, int k);
};

/// Which reduction rule a support vertex was resolved by.
enum class Branch : std::uint8_t {
  None,
  Infeasible,   // a pendant demand exceeds |N[u]| or the parent demand exceeds its cover
  Saturated,    // a demand equals its cover size: all of c(u) enters D, u and w turn R
  CoveredByRed, // R vertices around u already meet the pendant demand
  OneShort,     // one vertex short after the R leaves: w turns R
  Gap,          // two or more short: u and w turn R, extra leaves fill the rest
};

const char* to_string(Branch b);

/**
 * Mutable state of one leaf-stripping run.
 *
 * Vertices are visited in the tree's processing order. When a non-root vertex
 * u is visited all of its live children are leaves, and exactly one Branch rule
 * resolves the pendant edges at u, updates the demand on the edge to the
 * parent w and the labels of u and w, and deletes the children. What remains
 * after every non-root vertex is a star at the root, finished by
 * finalize_residual().
 *
 * A vertex belongs to the solution iff it was added by a rule, or it was R when
 * deleted, or it is picked by finalize_residual().
 *
 * Internally vertices are indexed by BFS position, so the children of a vertex
 * form a contiguous range and a run sweeps memory in order. Ties between
 * children go to the earlier position, which is the smaller id for trees built
 * by bfs_rooted().
 */
class SolverState {
 public:
  /// Throws InputError if the labelling does not fit the tree or the order is
  /// not a reversed BFS order.
  SolverState(const RootedTree& tree, const STLabeling& labels);
  /// Plain k-ve domination: every label B, every demand k.
  SolverState(const RootedTree& tree, int k);

  const RootedTree& tree() const { return *tree_; }
  /// Current labels and demands, indexed by vertex and edge id.
  STLabeling labeling() const;

  bool deleted(Vertex v) const { return deleted_[at(v)] != 0; }
  int live_children(Vertex v) const { return live_children_[at(v)]; }
  bool in_solution(Vertex v) const { return in_d_[at(v)] != 0; }
  bool infeasible() const { return infeasible_; }
  Branch last_branch() const { return last_branch_; }

  /// Non-root, not deleted, with at least one live child (all of them leaves).
  bool is_support_vertex(Vertex u) const { return support(at(u)); }

  /// Applies one rule at support vertex u. Returns false once the instance is infeasible.
  bool process_support_vertex(Vertex u);

  /// Completes the residual star; requires every non-root vertex to be resolved.
  std::optional<VertexSet> finalize_residual();

  /// Processes the whole order, then finalizes.
  std::optional<VertexSet> run();

 private:
  using Pos = std::uint32_t;

  explicit SolverState(const RootedTree& tree);
  Pos at(Vertex v) const;
  bool support(Pos p) const { return p != 0 && deleted_[p] == 0 && live_children_[p] > 0; }
  bool red(Pos p) const { return t_[p] == Label::R; }
  void mark_red(Pos p) { t_[p] = Label::R; }
  void add(Pos p) { in_d_[p] = 1; }
  bool process(Pos u);
  void remove_children(Pos u);
  bool fail();

  const RootedTree* tree_;
  std::vector<Vertex> vertex_;    // position -> vertex
  std::span<const Pos> pos_;      // vertex -> position
  std::span<const Pos> parent_;   // parent position; unused for the root
  std::vector<Pos> derived_pos_;  // backing storage when the tree lacks positions
  std::vector<Pos> derived_parent_;
  std::vector<Pos> first_child_;  // children of p: [first_child_[p], first_child_[p + 1])
  std::vector<Label> t_;
  std::vector<int> up_;           // demand on the edge to the parent
  std::vector<char> deleted_;
  std::vector<int> live_children_;
  std::vector<char> in_d_;
  std::vector<Pos> scratch_;
  bool infeasible_ = false;
  Branch last_branch_ = Branch::None;
};

/// Minimum (s,t)-dominating set, or nullopt if none exists. Throws InputError
/// on a labelling that does not match the tree or has negative demands.
std::optional<VertexSet> solve_st(const RootedTree& tree, const STLabeling& labels);

/// Minimum k-ve dominating set of a tree, or nullopt if none exists.
std::optional<VertexSet> solve_kve_tree(const RootedTree& tree, int k);

/// solve_st on every component of a forest, each rooted at its smallest vertex
/// except the one holding `root`. Throws InputError if g has a cycle.
std::optional<VertexSet> solve_st_forest(const Graph& g, const STLabeling& labels,
                                         Vertex root = 0);

}  // namespace kvedom
