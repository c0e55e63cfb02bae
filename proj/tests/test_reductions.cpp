#include <doctest.h>

#include <random>
#include <sstream>

#include "kvedom/reductions.hpp"
#include "support.hpp"

using namespace kvedom;
using namespace kvedom::testing;

namespace {

Ex3CInstance ex3c(int q, std::vector<std::array<int, 3>> c) { return {q, std::move(c)}; }

std::map<Role, int> role_counts(const GadgetGraph& g) {
  std::map<Role, int> out;
  for (const auto& r : g.roles) ++out[r.role];
  return out;
}

int expected_ex3c_order(int q, int m, int k) {
  return 3 * q + m + (k - 2) + 2 + 3 * q + 3 * q * (k - 1) + 6 * q;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("Ex3C instances are validated") {
  CHECK_NOTHROW(ex3c(1, {{0, 1, 2}}).validate());
  CHECK_THROWS_AS(ex3c(1, {{0, 0, 1}}).validate(), InputError);
  CHECK_THROWS_AS(ex3c(1, {{0, 1, 3}}).validate(), InputError);
  CHECK_THROWS_AS(ex3c(0, {}).validate(), InputError);
  std::istringstream ok("2 2\n0 1 2\n3 4 5\n");
  const auto inst = read_ex3c(ok);
  CHECK(inst.q == 2);
  CHECK(inst.collection.size() == 2);
  std::istringstream pair("1 1\n0 1\n");
  CHECK_THROWS_AS(read_ex3c(pair), InputError);
  std::istringstream dup("1 1\n0 0 1\n");
  CHECK_THROWS_AS(read_ex3c(dup), InputError);
  std::istringstream count("1 2\n0 1 2\n");
  CHECK_THROWS_AS(read_ex3c(count), InputError);
}

TEST_CASE("exact cover search") {
  CHECK(has_exact_cover(ex3c(1, {{2, 1, 0}})));
  CHECK_FALSE(has_exact_cover(ex3c(1, {})));
  CHECK(has_exact_cover(ex3c(2, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}})));
  CHECK_FALSE(has_exact_cover(ex3c(2, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}})));
  CHECK(has_exact_cover(ex3c(3, {{0, 1, 3}, {2, 4, 5}, {0, 6, 7}, {1, 2, 8}, {3, 6, 8}, {3, 4, 5}})));
}

TEST_CASE("Ex3C gadget shape") {
  const auto g = build_ex3c_gadget(ex3c(1, {{0, 1, 2}}), 3);
  CHECK(g.graph.order() == 22);
  CHECK(is_chordal(g.graph));
  CHECK(audit_gadget(g).empty());

  const auto k2 = build_ex3c_gadget(ex3c(1, {{0, 1, 2}}), 2);
  CHECK(k2.graph.order() == 18);
  CHECK(role_counts(k2)[Role::Bridge] == 0);
  const Vertex v = 3 + 1;
  const Vertex u = v + 1;
  CHECK(k2.roles[static_cast<std::size_t>(v)].role == Role::V);
  CHECK(k2.roles[static_cast<std::size_t>(u)].role == Role::U);
  CHECK(k2.graph.neighbors(v).size() == 1);
  CHECK(k2.graph.neighbors(u).size() == 1);
  CHECK_FALSE(is_connected(k2.graph));
  CHECK_FALSE(k2.provenance.note.empty());

  const auto big = build_ex3c_gadget(ex3c(2, {{0, 1, 2}, {3, 4, 5}, {1, 3, 5}}), 4);
  auto counts = role_counts(big);
  CHECK(counts[Role::Element] == 6);
  CHECK(counts[Role::Guard] == 6);
  CHECK(counts[Role::Subset] == 3);
  CHECK(counts[Role::Bridge] == 2);
  CHECK(counts[Role::GuardClique] == 18);
  CHECK(counts[Role::Z] == 6);
  CHECK(counts[Role::L] == 6);
  CHECK(big.graph.order() == expected_ex3c_order(2, 3, 4));
  CHECK(big.provenance.kind == Reduction::Ex3C);
  CHECK(big.provenance.k == 4);
  CHECK(big.provenance.subsets == 3);

  CHECK_THROWS_AS(build_ex3c_gadget(ex3c(1, {{0, 1, 2}}), 1), InputError);
}

TEST_CASE("Ex3C gadget layout") {
  const auto g = build_ex3c_gadget(ex3c(1, {{0, 1, 2}}), 3);
  std::ostringstream roles;
  write_roles(roles, g);
  const std::string want =
      "0 a0\n1 a1\n2 a2\n3 b0\n4 p0\n5 v\n6 u\n7 y0\n8 y1\n9 y2\n10 q0.0\n11 q0.1\n"
      "12 q1.0\n13 q1.1\n14 q2.0\n15 q2.1\n16 z0\n17 z1\n18 z2\n19 l0\n20 l1\n21 l2\n";
  CHECK(roles.str() == want);
  CHECK(g.graph.has_edge(0, 3));
  CHECK(g.graph.has_edge(3, 4));
  CHECK(g.graph.has_edge(4, 5));
  CHECK(g.graph.has_edge(5, 6));
  CHECK(g.graph.has_edge(7, 0));
  CHECK(g.graph.has_edge(10, 11));
  CHECK(g.graph.has_edge(7, 10));
  CHECK(g.graph.has_edge(16, 10));
  CHECK(g.graph.has_edge(16, 19));
  CHECK_FALSE(g.graph.has_edge(7, 12));
}

TEST_CASE("random Ex3C gadgets are chordal and pass the audit") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const int q = 1 + trial % 3;
    const int m = static_cast<int>(rng() % 7);
    Ex3CInstance inst{q, {}};
    for (int j = 0; j < m; ++j) {
      std::vector<int> pool(static_cast<std::size_t>(3 * q));
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), rng);
      inst.collection.push_back({pool[0], pool[1], pool[2]});
    }
    for (int k = 2; k <= 5; ++k) {
      const auto g = build_ex3c_gadget(inst, k);
      CHECK(g.graph.order() == expected_ex3c_order(q, m, k));
      CHECK(audit_gadget(g).empty());
      if (k >= 3) CHECK(is_chordal(g.graph));
      int count = 0;
      const auto comp = connected_components(g.graph, &count);
      for (int c = 0; c < count; ++c) {
        std::vector<Vertex> part;
        for (Vertex v = 0; v < g.graph.order(); ++v) {
          if (comp[static_cast<std::size_t>(v)] == c) part.push_back(v);
        }
        CHECK(is_chordal(induced_subgraph(g.graph, part)));
      }
    }
  }
}

TEST_CASE("the audit notices tampering") {
  auto g = build_ex3c_gadget(ex3c(1, {{0, 1, 2}}), 3);
  auto edges = std::vector<Edge>(g.graph.edges().begin(), g.graph.edges().end());
  edges.push_back({7, 12});
  auto extra = g;
  extra.graph = Graph(g.graph.order(), edges);
  CHECK_FALSE(audit_gadget(extra).empty());
  edges.pop_back();
  edges.erase(edges.begin());
  auto missing = g;
  missing.graph = Graph(g.graph.order(), edges);
  CHECK_FALSE(audit_gadget(missing).empty());
  auto relabelled = g;
  relabelled.roles[0].role = Role::Z;
  CHECK_FALSE(audit_gadget(relabelled).empty());
}

TEST_CASE("ve to kve gadget") {
  const auto k2 = build_ve_to_kve(Graph(2, {{0, 1}}), 2);
  CHECK(k2.graph.order() == 5);
  CHECK(k2.graph == Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 2}, {3, 4}}));
  CHECK(audit_gadget(k2).empty());
  CHECK(build_ve_to_kve(path_graph(3), 3).graph.order() == 7);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph src = random_graph(rng, 1 + trial % 9, 0.4);
    for (int k = 2; k <= 4; ++k) {
      const auto g = build_ve_to_kve(src, k);
      CHECK(g.graph.order() == src.order() + k + 1);
      CHECK(audit_gadget(g).empty());
    }
  }
  CHECK_THROWS_AS(build_ve_to_kve(path_graph(3), 1), InputError);
}

TEST_CASE("k-tuple gadget") {
  const auto k3 = build_ktuple_to_kve(complete_graph(3));
  CHECK(k3.graph.order() == 6);
  CHECK(k3.graph.size() == 6);
  CHECK(audit_gadget(k3).empty());
  CHECK(build_ktuple_to_kve(Graph(1, {})).graph == Graph(2, {{0, 1}}));
  CHECK_FALSE(k3.provenance.note.empty());
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph src = random_graph(rng, 2 + trial % 9, 0.4);
    const auto g = build_ktuple_to_kve(src);
    CHECK(g.graph.max_degree() == src.max_degree() + 1);
    CHECK(audit_gadget(g).empty());
  }
}

TEST_CASE("ve to kve claim") {
  const auto p3 = evaluate_ve_to_kve_claim(path_graph(3), 2);
  CHECK(p3.holds);
  CHECK(p3.source_optimum == 1);
  CHECK(p3.gadget_optimum == 3);
  const auto star = evaluate_ve_to_kve_claim(star_graph(3), 3);
  CHECK(star.holds);
  CHECK(star.source_optimum == 1);
  CHECK(star.gadget_optimum == 4);
  CHECK(check_ve_to_kve_claim(Graph(2, {{0, 1}}), 2));
  CHECK(p3.summary() == "PASS source_optimum=1 gadget_optimum=3");
}

TEST_CASE("k-tuple claim") {
  const auto k3 = evaluate_ktuple_claim(complete_graph(3), 2);
  CHECK(k3.holds);
  CHECK(k3.source_optimum == 2);
  CHECK(check_ktuple_claim(cycle_graph(5), 2));
  CHECK(evaluate_ktuple_claim(cycle_graph(5), 2).source_optimum ==
        brute_ktuple(cycle_graph(5), 2));
}

TEST_CASE("k-tuple claim fails where the source is infeasible but the gadget is not") {
  // A leaf's pendant edge sees the leaf, its pendant and its neighbour.
  const auto p3 = evaluate_ktuple_claim(path_graph(3), 3);
  CHECK_FALSE(p3.source_optimum.has_value());
  CHECK(p3.gadget_optimum.has_value());
  CHECK_FALSE(p3.holds);
  const auto k1 = evaluate_ktuple_claim(Graph(1, {}), 2);
  CHECK_FALSE(k1.source_optimum.has_value());
  CHECK(k1.gadget_optimum == 2);
  CHECK_FALSE(k1.holds);
}

TEST_CASE("Ex3C claim with one triple falls one vertex short of the threshold") {
  const auto inst = ex3c(1, {{0, 1, 2}});
  const auto k2 = evaluate_ex3c_claim(inst, 2);
  CHECK(k2.exact_cover);
  CHECK(k2.threshold == 9);
  CHECK(k2.gadget_optimum == 10);
  CHECK(k2.gadget_optimum == brute_kve(build_ex3c_gadget(inst, 2).graph, 2));
  CHECK_FALSE(k2.holds);
  CHECK(k2.summary() == "FAIL exact_cover=yes gadget_optimum=10 threshold=9");
}

TEST_CASE("Ex3C claim without a cover") {
  const auto none = evaluate_ex3c_claim(ex3c(1, {}), 2);
  CHECK_FALSE(none.exact_cover);
  CHECK(none.holds);
  CHECK(check_ex3c_claim(ex3c(2, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}}), 2));
}

TEST_CASE("Ex3C claim with two triples") {
  CHECK(check_ex3c_claim(ex3c(2, {{0, 1, 2}, {3, 4, 5}}), 2));
  CHECK(check_ex3c_claim(ex3c(2, {{0, 1, 2}, {3, 4, 5}, {1, 3, 5}}), 2));
}

}
