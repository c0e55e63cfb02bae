#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kvedom/graph.hpp"

namespace kvedom {

/// Set k-multicover instance: every element must lie in >= demand chosen
/// families, each family used at most once.
struct MulticoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> families;
  int demand = 1;

  std::size_t max_family_size() const;

  /// One line per family: `index: e e e`.
  std::string dump() const;
};

/// Universe = edge ids of g; family v = edges with an endpoint in N[v].
MulticoverInstance build_cover_instance(const Graph& g, int k);

/// Greedy multicover: repeatedly take the unused family covering the most
/// still-short elements, lowest index on ties. nullopt iff some element lies
/// in fewer than `demand` families. Returned indices are in selection order.
std::optional<std::vector<std::size_t>> greedy_multicover(const MulticoverInstance& inst);

/// Greedy k-ve dominating set via the multicover instance above.
std::optional<VertexSet> approx_kve(const Graph& g, int k);

}  // namespace kvedom
