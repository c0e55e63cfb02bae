#include "kvedom/generators.hpp"

#include <algorithm>

namespace kvedom {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  if (n == 1) return Graph(1, std::vector<Edge>{});
  if (n == 2) return Graph(2, {{0, 1}});

  const auto count = static_cast<std::size_t>(n);
  std::vector<Vertex> code(count - 2);
  for (auto& x : code) x = static_cast<Vertex>(uniform_below(rng, count));

  // Linear-time Prüfer decoding.
  std::vector<int> degree(count, 1);
  for (Vertex x : code) ++degree[static_cast<std::size_t>(x)];
  std::vector<Edge> edges;
  edges.reserve(count - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  auto leaf = static_cast<Vertex>(ptr);
  for (Vertex x : code) {
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    const auto xi = static_cast<std::size_t>(x);
    if (--degree[xi] == 1 && xi < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph(n, std::move(edges));
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace kvedom
