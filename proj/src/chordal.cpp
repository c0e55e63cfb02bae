#include <algorithm>

#include "kvedom/graph.hpp"

namespace kvedom {

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  // Buckets hold stale entries; an entry is live if its weight still matches.
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (std::size_t v = n; v-- > 0;) buckets[0].push_back(static_cast<Vertex>(v));

  std::vector<Vertex> visit;
  visit.reserve(n);
  std::size_t top = 0;
  while (visit.size() < n) {
    auto& bucket = buckets[top];
    if (bucket.empty()) {
      --top;
      continue;
    }
    Vertex x = bucket.back();
    bucket.pop_back();
    const auto xi = static_cast<std::size_t>(x);
    if (numbered[xi] || static_cast<std::size_t>(weight[xi]) != top) continue;
    numbered[xi] = 1;
    visit.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      const auto yi = static_cast<std::size_t>(y);
      if (numbered[yi]) continue;
      const auto w = static_cast<std::size_t>(++weight[yi]);
      buckets[w].push_back(y);
      top = std::max(top, w);
    }
  }
  return visit;
}

bool is_chordal(const Graph& g) {
  auto visit = maximum_cardinality_search(g);
  std::vector<int> position(visit.size());
  for (std::size_t i = 0; i < visit.size(); ++i) {
    position[static_cast<std::size_t>(visit[i])] = static_cast<int>(i);
  }
  // The reverse visit order is a perfect elimination ordering iff g is chordal:
  // the earlier-visited neighbours of every vertex must form a clique, which
  // reduces to checking them against the latest of them.
  std::vector<Vertex> earlier;
  for (Vertex v : visit) {
    const int pv = position[static_cast<std::size_t>(v)];
    earlier.clear();
    for (Vertex u : g.neighbors(v)) {
      if (position[static_cast<std::size_t>(u)] < pv) earlier.push_back(u);
    }
    if (earlier.size() < 2) continue;
    auto latest = *std::max_element(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) {
      return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
    });
    for (Vertex u : earlier) {
      if (u != latest && !g.has_edge(u, latest)) return false;
    }
  }
  return true;
}

}  // namespace kvedom
