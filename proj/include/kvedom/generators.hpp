#pragma once

#include <cstdint>
#include <random>

#include "kvedom/graph.hpp"

namespace kvedom {

/// Portable bounded draw; the standard distributions are not bit-stable across
/// library implementations and generated files must be reproducible.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64& rng);

/// Uniformly random labelled tree on n vertices, decoded from a random Prüfer sequence.
Graph gen_random_tree(int n, std::uint64_t seed);

/// G(n, p): every pair u < v is an edge independently with probability p.
Graph gen_random_graph(int n, double p, std::uint64_t seed);

}  // namespace kvedom
