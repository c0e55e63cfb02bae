#pragma once
// Brute-force references and graph enumerators for the test suites. Nothing in
// here calls the solvers under test; only the Graph container is shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kvedom/graph.hpp"

namespace kvedom::testing {

using Mask = std::uint32_t;

inline std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> n(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) n[static_cast<std::size_t>(v)] = Mask{1} << v;
  for (const auto& e : g.edges()) {
    n[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    n[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return n;
}

inline VertexSet set_of(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

// Visits subsets of {0..n-1} by increasing size; stops when f returns true.
template <typename F>
std::optional<Mask> first_by_size(int n, F&& f) {
  for (int size = 0; size <= n; ++size) {
    if (size == 0) {
      if (f(Mask{0})) return Mask{0};
      continue;
    }
    Mask m = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << n;
    while (m < limit) {
      if (f(m)) return m;
      const Mask c = m & (~m + 1);
      const Mask r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

/// Per-edge demand check straight from the definition.
inline bool brute_is_kve(const Graph& g, Mask d, int k) {
  const auto n = closed_masks(g);
  for (const auto& e : g.edges()) {
    const Mask cover = n[static_cast<std::size_t>(e.u)] | n[static_cast<std::size_t>(e.v)];
    if (std::popcount(cover & d) < k) return false;
  }
  return true;
}

/// Minimum k-ve dominating set size, nullopt if infeasible.
inline std::optional<int> brute_kve(const Graph& g, int k) {
  auto m = first_by_size(g.order(), [&](Mask d) { return brute_is_kve(g, d, k); });
  if (!m) return std::nullopt;
  return std::popcount(*m);
}

inline std::optional<int> brute_ktuple(const Graph& g, int k) {
  const auto n = closed_masks(g);
  auto m = first_by_size(g.order(), [&](Mask d) {
    return std::all_of(n.begin(), n.end(), [&](Mask nv) { return std::popcount(nv & d) >= k; });
  });
  if (!m) return std::nullopt;
  return std::popcount(*m);
}

/// Minimum (s,t)-dominating set size: red vertices forced, demand s[e] per edge id.
inline std::optional<int> brute_st(const Graph& g, const std::vector<bool>& red,
                                   const std::vector<int>& s) {
  const auto n = closed_masks(g);
  Mask forced = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (red[static_cast<std::size_t>(v)]) forced |= Mask{1} << v;
  }
  auto ok = [&](Mask d) {
    if ((d & forced) != forced) return false;
    for (EdgeId e = 0; e < g.size(); ++e) {
      const auto& ed = g.edge(e);
      const Mask cover = n[static_cast<std::size_t>(ed.u)] | n[static_cast<std::size_t>(ed.v)];
      if (std::popcount(cover & d) < s[e]) return false;
    }
    return true;
  };
  auto m = first_by_size(g.order(), ok);
  if (!m) return std::nullopt;
  return std::popcount(*m);
}

/// Chordless cycle of length >= 4 exists, by checking every vertex subset.
inline bool brute_has_hole(const Graph& g) {
  const auto n = closed_masks(g);
  const int order = g.order();
  for (Mask sub = 0; sub < (Mask{1} << order); ++sub) {
    if (std::popcount(sub) < 4) continue;
    bool cycle = true;
    for (Vertex v = 0; v < order && cycle; ++v) {
      if (!(sub >> v & 1)) continue;
      cycle = std::popcount(n[static_cast<std::size_t>(v)] & sub & ~(Mask{1} << v)) == 2;
    }
    if (!cycle) continue;
    // Every vertex has degree two inside; a hole iff it is one cycle.
    Mask seen = sub & (~sub + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex v = 0; v < order; ++v) {
        if ((seen >> v & 1) == 0) continue;
        const Mask next = seen | (n[static_cast<std::size_t>(v)] & sub);
        if (next != seen) {
          seen = next;
          grew = true;
        }
      }
    }
    if (seen == sub) return true;
  }
  return false;
}

inline bool brute_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto n = closed_masks(g);
  Mask seen = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((seen >> v & 1) && (seen | n[static_cast<std::size_t>(v)]) != seen) {
        seen |= n[static_cast<std::size_t>(v)];
        grew = true;
      }
    }
  }
  return seen == (Mask{1} << g.order()) - 1;
}

inline Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs, Mask bits) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (bits >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
  }
  return Graph(n, std::move(edges));
}

// Lexicographically least adjacency bit string over all relabellings.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
          code |= std::uint64_t{1} << bit;
        }
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of connected graphs on n <= 7 vertices.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (Mask bits = 0; bits < (Mask{1} << pairs.size()); ++bits) {
    if (std::popcount(bits) < n - 1) continue;
    Graph g = graph_from_pairs(n, pairs, bits);
    if (!brute_connected(g)) continue;
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

namespace detail {

inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int from) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (w != from) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_code(const std::vector<std::vector<int>>& adj) {
  // Encode from each centre; the least string is canonical.
  const int n = static_cast<int>(adj.size());
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto s = rooted_code(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace detail

/// One representative per isomorphism class of trees on exactly n vertices.
inline std::vector<Graph> free_trees(int n) {
  std::vector<std::vector<std::vector<int>>> level{{{}}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, std::vector<std::vector<int>>> next;
    for (const auto& adj : level) {
      for (int v = 0; v + 1 < size; ++v) {
        auto grown = adj;
        grown.push_back({v});
        grown[static_cast<std::size_t>(v)].push_back(size - 1);
        next.emplace(detail::tree_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, adj] : next) level.push_back(std::move(adj));
  }
  std::vector<Graph> out;
  for (const auto& adj : level) {
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (v < w) edges.push_back({v, w});
      }
    }
    out.emplace_back(static_cast<int>(adj.size()), std::move(edges));
  }
  return out;
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

/// Random G(n,p) drawn with std::uniform distributions; only for test inputs.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace kvedom::testing
