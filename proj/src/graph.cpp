#include "kvedom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "kvedom/kernels.hpp"
#include "neighborhood.hpp"

namespace kvedom {

Graph::Graph(int n, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  const auto count = static_cast<std::size_t>(n);
  adjacency_.resize(count);
  incidence_.resize(count);
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> rows(count);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)].emplace_back(v, e);
    rows[static_cast<std::size_t>(v)].emplace_back(u, e);
  }
  for (std::size_t x = 0; x < count; ++x) {
    auto& row = rows[x];
    std::sort(row.begin(), row.end());
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first == row[i - 1].first) {
        throw InputError("duplicate edge " + std::to_string(x) + " " +
                         std::to_string(row[i].first));
      }
    }
    adjacency_[x].reserve(row.size());
    incidence_[x].reserve(row.size());
    for (const auto& [y, e] : row) {
      adjacency_[x].push_back(y);
      incidence_[x].push_back(e);
    }
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (const auto& [u, v] : edges) out.push_back({u, v});
        return out;
      }()) {}

std::size_t Graph::check(Vertex v) const {
  if (!contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

const Edge& Graph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw InputError("edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  const auto& row = adjacency_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return incidence_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - row.begin())];
}

bool Graph::has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::from_mask(std::span<const char> mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.members_.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(int n) const {
  std::vector<char> out(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (Vertex v : members_) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    out[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

bool VertexSet::valid_for(const Graph& g) const {
  return members_.empty() || (members_.front() >= 0 && members_.back() < g.order());
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  return out.str();
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto adj = g.neighbors(v);
  std::vector<Vertex> out(adj.begin(), adj.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return VertexSet(std::move(out));
}

VertexSet edge_cover_set(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw InputError(std::to_string(u) + " " + std::to_string(v) + " is not an edge");
  }
  std::vector<Vertex> out;
  detail::for_each_in_cover(g, u, v, [&out](Vertex x) { out.push_back(x); });
  return VertexSet(std::move(out));
}

std::size_t edge_cover_size(const Graph& g, EdgeId e) {
  const auto& edge = g.edge(e);
  std::size_t count = 0;
  detail::for_each_in_cover(g, edge.u, edge.v, [&count](Vertex) { ++count; });
  return count;
}

namespace {

void require_k(int k) {
  if (k < 1) throw InputError("k must be at least 1");
}

}  // namespace

std::optional<EdgeId> first_violated_edge(const Graph& g, const VertexSet& d, int k) {
  require_k(k);
  if (!d.valid_for(g)) throw InputError("vertex set does not fit the graph");
  auto mask = d.mask(g.order());
  auto counts = kernels::omp::cover_counts(g, mask);
  auto it = std::find_if(counts.begin(), counts.end(), [k](int c) { return c < k; });
  if (it == counts.end()) return std::nullopt;
  return static_cast<EdgeId>(it - counts.begin());
}

bool verify_kve(const Graph& g, const VertexSet& d, int k) {
  return !first_violated_edge(g, d, k).has_value();
}

bool feasible(const Graph& g, int k) {
  require_k(k);
  auto sizes = kernels::omp::cover_counts(g, {});
  return std::all_of(sizes.begin(), sizes.end(), [k](int c) { return c >= k; });
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

bool is_forest(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return g.size() + static_cast<std::size_t>(count) == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) &&
         g.size() + 1 == static_cast<std::size_t>(g.order());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex a = local[static_cast<std::size_t>(e.u)];
    Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

RootedTree bfs_rooted(const Graph& g, Vertex root) {
  if (!g.contains(root)) throw InputError("root " + std::to_string(root) + " out of range");
  if (!is_tree(g)) throw InputError("graph is not a tree");
  const auto n = static_cast<std::size_t>(g.order());
  RootedTree t;
  t.graph = g;
  t.root = root;
  t.parent.assign(n, kNoParent);
  t.depth.assign(n, -1);
  t.parent_edge.assign(n, 0);
  t.position.assign(n, 0);
  t.parent_position.assign(n, 0);
  t.order.reserve(n);

  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(root);
  t.depth[static_cast<std::size_t>(root)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    auto adj = g.neighbors(x);
    auto inc = g.incident_edges(x);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const auto y = static_cast<std::size_t>(adj[i]);
      if (t.depth[y] >= 0) continue;
      t.depth[y] = t.depth[static_cast<std::size_t>(x)] + 1;
      t.parent[y] = x;
      t.parent_edge[y] = inc[i];
      t.position[y] = static_cast<std::uint32_t>(queue.size());
      t.parent_position[queue.size()] = static_cast<std::uint32_t>(head);
      queue.push_back(adj[i]);
    }
  }
  t.order.assign(queue.rbegin(), queue.rend());
  return t;
}

}  // namespace kvedom
