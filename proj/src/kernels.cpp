#include "kvedom/kernels.hpp"

#include <algorithm>

#include "neighborhood.hpp"

namespace kvedom::kernels {
namespace {

int merged_count(const Graph& g, Vertex u, Vertex v, std::span<const char> in_set) {
  int count = 0;
  detail::for_each_in_cover(g, u, v, [&](Vertex x) {
    if (in_set.empty() || in_set[static_cast<std::size_t>(x)]) ++count;
  });
  return count;
}

std::vector<EdgeId> family_of(const Graph& g, Vertex v) {
  std::vector<EdgeId> out(g.incident_edges(v).begin(), g.incident_edges(v).end());
  for (Vertex x : g.neighbors(v)) {
    auto inc = g.incident_edges(x);
    out.insert(out.end(), inc.begin(), inc.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

namespace serial {

std::vector<int> cover_counts(const Graph& g, std::span<const char> in_set) {
  auto edges = g.edges();
  std::vector<int> counts(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    counts[e] = merged_count(g, edges[e].u, edges[e].v, in_set);
  }
  return counts;
}

std::vector<std::vector<EdgeId>> cover_families(const Graph& g) {
  std::vector<std::vector<EdgeId>> families(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    families[static_cast<std::size_t>(v)] = family_of(g, v);
  }
  return families;
}

}  // namespace serial

namespace omp {

std::vector<int> cover_counts(const Graph& g, std::span<const char> in_set) {
  auto edges = g.edges();
  const auto m = static_cast<long long>(edges.size());
  std::vector<int> counts(edges.size());
#pragma omp parallel for schedule(static) if (edges.size() >= kParallelThreshold)
  for (long long e = 0; e < m; ++e) {
    const auto& edge = edges[static_cast<std::size_t>(e)];
    counts[static_cast<std::size_t>(e)] = merged_count(g, edge.u, edge.v, in_set);
  }
  return counts;
}

std::vector<std::vector<EdgeId>> cover_families(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<EdgeId>> families(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64) if (g.size() >= kParallelThreshold)
  for (Vertex v = 0; v < n; ++v) {
    families[static_cast<std::size_t>(v)] = family_of(g, v);
  }
  return families;
}

}  // namespace omp

}  // namespace kvedom::kernels
