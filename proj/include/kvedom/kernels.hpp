#pragma once

// Data-parallel loops shared by the solvers. Every kernel has a plain serial
// version, kept as the reference the OpenMP version is tested against, and an
// OpenMP version used by the public API.

#include <span>
#include <vector>

#include "kvedom/graph.hpp"

namespace kvedom::kernels {

/// Loops shorter than this stay serial inside the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

/// |(N[u] ∪ N[v]) ∩ D| for every edge, D given as a membership mask.
/// An empty mask counts the whole cover set.
std::vector<int> cover_counts(const Graph& g, std::span<const char> in_set);

/// For every vertex v the sorted ids of edges with an endpoint in N[v].
std::vector<std::vector<EdgeId>> cover_families(const Graph& g);

}  // namespace serial

namespace omp {

std::vector<int> cover_counts(const Graph& g, std::span<const char> in_set);
std::vector<std::vector<EdgeId>> cover_families(const Graph& g);

}  // namespace omp

}  // namespace kvedom::kernels
