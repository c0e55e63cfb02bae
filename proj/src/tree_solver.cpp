#include "kvedom/tree_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace kvedom {

STLabeling STLabeling::uniform(const Graph& g, int k) {
  return {std::vector<Label>(static_cast<std::size_t>(g.order()), Label::B),
          std::vector<int>(g.size(), k)};
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::None: return "none";
    case Branch::Infeasible: return "infeasible";
    case Branch::Saturated: return "saturated";
    case Branch::CoveredByRed: return "covered-by-red";
    case Branch::OneShort: return "one-short";
    case Branch::Gap: return "gap";
  }
  return "?";
}

SolverState::SolverState(const RootedTree& tree) : tree_(&tree) {
  const auto n = static_cast<std::size_t>(tree.graph.order());
  if (tree.order.size() != n || tree.parent.size() != n || tree.parent_edge.size() != n) {
    throw InputError("rooted tree arrays do not match the graph");
  }
  vertex_.assign(tree.order.rbegin(), tree.order.rend());
  if (n > 0 && vertex_[0] != tree.root) throw InputError("processing order must end at the root");

  if (tree.position.size() == n && tree.parent_position.size() == n) {
    pos_ = tree.position;
    parent_ = tree.parent_position;
  } else {
    derived_pos_.assign(n, static_cast<Pos>(n));
    for (Pos p = 0; p < n; ++p) {
      const auto v = static_cast<std::size_t>(vertex_[p]);
      if (v >= n || derived_pos_[v] != n) {
        throw InputError("processing order is not a permutation of the vertices");
      }
      derived_pos_[v] = p;
    }
    derived_parent_.assign(n, 0);
    for (Pos p = 1; p < n; ++p) {
      const Vertex up = tree.parent[static_cast<std::size_t>(vertex_[p])];
      if (!tree.graph.contains(up)) throw InputError("non-root vertex without a parent");
      derived_parent_[p] = derived_pos_[static_cast<std::size_t>(up)];
    }
    pos_ = derived_pos_;
    parent_ = derived_parent_;
  }

  // In BFS order the parent position never decreases, which makes every
  // child list a contiguous range.
  first_child_.assign(n + 1, static_cast<Pos>(n));
  Pos next_parent = 0;
  for (Pos p = 1; p < n; ++p) {
    const Pos q = parent_[p];
    if (q >= p || q + 1 < next_parent) throw InputError("processing order is not a reversed BFS");
    for (; next_parent <= q; ++next_parent) first_child_[next_parent] = p;
  }
  live_children_.resize(n);
  for (Pos p = 0; p < n; ++p) {
    live_children_[p] = static_cast<int>(first_child_[p + 1] - first_child_[p]);
  }
  deleted_.assign(n, 0);
  in_d_.assign(n, 0);
}

SolverState::SolverState(const RootedTree& tree, const STLabeling& labels) : SolverState(tree) {
  const auto n = vertex_.size();
  if (labels.t.size() != n) throw InputError("labelling covers the wrong number of vertices");
  if (labels.s.size() != tree.graph.size()) {
    throw InputError("labelling covers the wrong number of edges");
  }
  if (std::any_of(labels.s.begin(), labels.s.end(), [](int s) { return s < 0; })) {
    throw InputError("edge demands must be non-negative");
  }
  t_.resize(n);
  up_.assign(n, 0);
  for (Pos p = 0; p < n; ++p) {
    const auto v = static_cast<std::size_t>(vertex_[p]);
    t_[p] = labels.t[v];
    if (p != 0) up_[p] = labels.s[tree.parent_edge[v]];
  }
}

SolverState::SolverState(const RootedTree& tree, int k) : SolverState(tree) {
  if (k < 0) throw InputError("edge demands must be non-negative");
  t_.assign(vertex_.size(), Label::B);
  up_.assign(vertex_.size(), k);
}

SolverState::Pos SolverState::at(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_.size()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  return pos_[static_cast<std::size_t>(v)];
}

STLabeling SolverState::labeling() const {
  STLabeling out{std::vector<Label>(vertex_.size()), std::vector<int>(tree_->graph.size(), 0)};
  for (Pos p = 0; p < vertex_.size(); ++p) {
    const auto v = static_cast<std::size_t>(vertex_[p]);
    out.t[v] = t_[p];
    if (p != 0) out.s[tree_->parent_edge[v]] = up_[p];
  }
  return out;
}

bool SolverState::fail() {
  infeasible_ = true;
  last_branch_ = Branch::Infeasible;
  return false;
}

void SolverState::remove_children(Pos u) {
  for (Pos z : scratch_) {
    if (red(z)) add(z);
    deleted_[z] = 1;
  }
  live_children_[u] = 0;
}

bool SolverState::process_support_vertex(Vertex u) {
  if (infeasible_) return false;
  const Pos p = at(u);
  if (!support(p)) {
    throw std::logic_error("vertex " + std::to_string(u) + " is not a support vertex");
  }
  for (Pos z = first_child_[p]; z < first_child_[p + 1]; ++z) {
    if (deleted_[z] == 0 && live_children_[z] != 0) {
      throw std::logic_error("child " + std::to_string(vertex_[z]) + " of " + std::to_string(u) +
                             " is not a leaf yet");
    }
  }
  return process(p);
}

bool SolverState::process(Pos u) {
  const Pos w = parent_[u];

  // c(u) in position order.
  scratch_.clear();
  for (Pos z = first_child_[u]; z < first_child_[u + 1]; ++z) {
    if (deleted_[z] == 0) scratch_.push_back(z);
  }
  const int leaves = static_cast<int>(scratch_.size());
  const int closed_u = leaves + 2;
  const int closed_w = live_children_[w] + (w == 0 ? 1 : 2);
  const int cover_uw = closed_u + closed_w - 2;

  int top = 0;
  for (Pos z : scratch_) top = std::max(top, up_[z]);
  int& up = up_[u];

  if (top > closed_u || up > cover_uw) return fail();

  // The parent edge is covered by c(u) ∪ N[w] only, so once N[w] is exhausted
  // the remainder must come from c(u); B leaves are interchangeable there.
  int red_leaves = static_cast<int>(std::count_if(scratch_.begin(), scratch_.end(),
                                                  [this](Pos z) { return red(z); }));
  for (auto it = scratch_.begin(); up - closed_w > red_leaves && it != scratch_.end(); ++it) {
    if (!red(*it)) {
      mark_red(*it);
      ++red_leaves;
    }
  }
  const int red_around = red_leaves + (red(u) ? 1 : 0) + (red(w) ? 1 : 0);

  if (top == closed_u || up == cover_uw) {
    last_branch_ = Branch::Saturated;
    mark_red(u);
    mark_red(w);
    up = std::max(up - leaves, 0);
    for (Pos z : scratch_) add(z);
  } else if (top <= red_around) {
    last_branch_ = Branch::CoveredByRed;
    up = std::max(up - red_leaves, 0);
  } else if (top - red_leaves == 1) {
    last_branch_ = Branch::OneShort;
    mark_red(w);
    up = std::max(up - red_leaves, 0);
  } else {
    last_branch_ = Branch::Gap;
    mark_red(w);
    mark_red(u);
    up = std::max(up - top + 2, 0);
    int extra = top - red_leaves - 2;
    for (auto it = scratch_.begin(); extra > 0 && it != scratch_.end(); ++it) {
      if (!red(*it)) {
        add(*it);
        --extra;
      }
    }
  }
  remove_children(u);
  return true;
}

std::optional<VertexSet> SolverState::finalize_residual() {
  if (infeasible_) return std::nullopt;
  const auto n = vertex_.size();
  if (n == 0) return VertexSet{};

  // Every other survivor is a leaf child of the root, so each residual edge is
  // covered by the whole residual vertex set.
  std::vector<Pos> residual{0};
  int need = 0;
  for (Pos p = 1; p < n; ++p) {
    if (deleted_[p] != 0) continue;
    if (live_children_[p] > 0 || parent_[p] != 0) {
      throw std::logic_error("residual tree is not a star at the root");
    }
    residual.push_back(p);
    need = std::max(need, up_[p]);
  }
  const auto size = static_cast<int>(residual.size());
  if (need > size) {
    fail();
    return std::nullopt;
  }

  // A residual single edge has two centres; take the deeper one.
  const Pos center = size == 2 ? residual[1] : 0;
  int have = 0;
  for (Pos p : residual) {
    if (red(p)) add(p);
    if (in_d_[p] != 0) ++have;
  }
  if (have < need && in_d_[center] == 0) {
    add(center);
    ++have;
  }
  for (auto it = residual.begin(); have < need && it != residual.end(); ++it) {
    if (in_d_[*it] == 0) {
      add(*it);
      ++have;
    }
  }

  std::vector<char> mask(n, 0);
  for (Pos p = 0; p < n; ++p) {
    if (in_d_[p] != 0) mask[static_cast<std::size_t>(vertex_[p])] = 1;
  }
  return VertexSet::from_mask(mask);
}

std::optional<VertexSet> SolverState::run() {
  for (auto p = static_cast<Pos>(vertex_.size()); p-- > 1;) {
    if (support(p) && !process(p)) return std::nullopt;
  }
  return finalize_residual();
}

std::optional<VertexSet> solve_st(const RootedTree& tree, const STLabeling& labels) {
  SolverState state(tree, labels);
  return state.run();
}

std::optional<VertexSet> solve_kve_tree(const RootedTree& tree, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  SolverState state(tree, k);
  return state.run();
}

std::optional<VertexSet> solve_st_forest(const Graph& g, const STLabeling& labels,
                                         Vertex root) {
  if (!is_forest(g)) throw InputError("graph has a cycle");
  if (labels.t.size() != static_cast<std::size_t>(g.order()) || labels.s.size() != g.size()) {
    throw InputError("labelling does not match the graph");
  }
  if (g.order() > 0 && !g.contains(root)) throw InputError("root is not a vertex");
  int count = 0;
  const auto comp = connected_components(g, &count);
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.order(); ++v) {
    members[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  }

  std::vector<Vertex> solution;
  for (const auto& vs : members) {
    const Graph sub = induced_subgraph(g, vs);
    STLabeling local;
    for (Vertex v : vs) local.t.push_back(labels.t[static_cast<std::size_t>(v)]);
    for (const auto& e : sub.edges()) {
      const auto id =
          g.find_edge(vs[static_cast<std::size_t>(e.u)], vs[static_cast<std::size_t>(e.v)]);
      local.s.push_back(labels.s[*id]);
    }
    Vertex local_root = 0;
    if (auto it = std::find(vs.begin(), vs.end(), root); it != vs.end()) {
      local_root = static_cast<Vertex>(it - vs.begin());
    }
    auto part = solve_st(bfs_rooted(sub, local_root), local);
    if (!part) return std::nullopt;
    for (Vertex v : *part) solution.push_back(vs[static_cast<std::size_t>(v)]);
  }
  return VertexSet(std::move(solution));
}

}  // namespace kvedom
