#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kvedom {

using Vertex = int;
using EdgeId = std::size_t;

/// Raised for malformed graphs, invalid vertex ids and similar caller errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Undirected simple graph on the dense vertex ids 0..n-1.
 *
 * Adjacency lists are sorted. Edges keep the order in which they were given,
 * and the position of an edge in that order is its EdgeId. Immutable after
 * construction.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[check(v)]; }

  /// Edge ids aligned with neighbors(v): incident_edges(v)[i] joins v and neighbors(v)[i].
  std::span<const EdgeId> incident_edges(Vertex v) const { return incidence_[check(v)]; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[check(v)].size()); }
  int max_degree() const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<Edge> edges_;
};

/// Strictly increasing list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  /// Builds the set from a membership mask indexed by vertex id.
  static VertexSet from_mask(std::span<const char> mask);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  /// Membership mask of length n. Throws InputError if a member is >= n.
  std::vector<char> mask(int n) const;

  bool valid_for(const Graph& g) const;
  bool subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

inline constexpr Vertex kNoParent = -1;

/**
 * A tree together with a root, parent pointers and the processing order.
 * Reversing `order` gives a BFS ordering from `root`, so depth is
 * non-increasing along `order` and the root comes last.
 */
struct RootedTree {
  Graph graph;
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::vector<Vertex> order;
  /// Edge id joining v to parent[v]; unused for the root.
  std::vector<EdgeId> parent_edge;
  /// BFS index of each vertex: the root has index 0 and order[n-1-i] has index i.
  std::vector<std::uint32_t> position;
  /// BFS index of the parent, indexed by BFS index; 0 for the root.
  std::vector<std::uint32_t> parent_position;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// N[u] ∪ N[v] for the edge uv. Throws InputError if uv is not an edge.
VertexSet edge_cover_set(const Graph& g, Vertex u, Vertex v);
std::size_t edge_cover_size(const Graph& g, EdgeId e);

/// True iff every edge uv has at least k members of d in N[u] ∪ N[v].
bool verify_kve(const Graph& g, const VertexSet& d, int k);

/// First edge (in input order) whose cover set meets d in fewer than k vertices.
std::optional<EdgeId> first_violated_edge(const Graph& g, const VertexSet& d, int k);

/// True iff a k-ve dominating set exists, i.e. every cover set has >= k vertices.
bool feasible(const Graph& g, int k);

bool is_chordal(const Graph& g);

/// Maximum-cardinality search order; position i holds the i-th visited vertex.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Component index per vertex, components numbered by their smallest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

/// Subgraph induced by `vertices` (sorted), relabelled 0..|vertices|-1 in that order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Throws InputError if g is not a tree or root is not a vertex of g.
RootedTree bfs_rooted(const Graph& g, Vertex root);

}  // namespace kvedom
