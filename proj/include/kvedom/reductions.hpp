#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kvedom/exact.hpp"
#include "kvedom/graph.hpp"

namespace kvedom {

/// Exact 3-cover instance over the universe {0, ..., 3q-1}.
struct Ex3CInstance {
  int q = 1;
  std::vector<std::array<int, 3>> collection;

  int universe() const { return 3 * q; }
  /// Throws InputError unless q >= 1 and every triple has 3 distinct in-range members.
  void validate() const;
};

/// `q m` then m lines of three element ids.
Ex3CInstance read_ex3c(std::istream& in);

/// Whether q pairwise-disjoint triples cover the universe.
bool has_exact_cover(const Ex3CInstance& inst);

enum class Role : std::uint8_t {
  Element,     // a_i
  Subset,      // b_j
  Bridge,      // p_i, the clique joining B to v
  V,
  U,
  Guard,       // y_i
  GuardClique, // member of Q_i
  Z,           // z_i
  L,           // l_i
  Original,    // vertex of the source graph
  Clique,      // c_j of the ve reduction
  Pendant,     // u_i of the k-tuple reduction
};

struct VertexRole {
  Role role = Role::Original;
  int index = 0;  // i or j; 0 for v and u
  int member = 0; // position inside Q_i

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Sidecar spelling: a3, b0, p1, v, u, y2, q2.0, z2, l2, g5, c0, u5.
std::string to_string(const VertexRole& r);

enum class Reduction : std::uint8_t { Ex3C, VeToKve, KtupleToKve };

const char* to_string(Reduction r);

struct Provenance {
  Reduction kind = Reduction::Ex3C;
  int k = 0;
  int q = 0;
  int subsets = 0;
  int source_order = 0;
  int source_max_degree = 0;
  /// Hypotheses of the source problem the builder does not enforce.
  std::string note;
};

struct GadgetGraph {
  Graph graph;
  std::vector<VertexRole> roles;
  Provenance provenance;
  std::optional<Ex3CInstance> ex3c_source;
  std::optional<Graph> graph_source;
};

/**
 * Chordal gadget for an exact 3-cover instance. Vertex layout: A (3q), B (m),
 * P (k-2), v, u, Y (3q), Q_0..Q_{3q-1} (k-1 each), z (3q), l (3q).
 *   - B ∪ P is a clique; a_i b_j is an edge iff element i lies in subset j.
 *   - u - v, and v is joined to all of P.
 *   - y_i - a_i; Q_i is a clique joined to y_i and to z_i; z_i - l_i.
 * The instance has an exact cover iff the gadget has a k-ve dominating set of
 * size at most k + q + 3qk (for q >= 2; see check_ex3c_claim).
 */
GadgetGraph build_ex3c_gadget(const Ex3CInstance& inst, int k);

/// G' = G plus a (k-1)-clique C joined to every vertex of G, a vertex v joined
/// to C and a pendant u on v. Layout: G, C, v, u.
GadgetGraph build_ve_to_kve(const Graph& g, int k);

/// G plus one pendant vertex per original vertex: u_i = n + i.
GadgetGraph build_ktuple_to_kve(const Graph& g);

/// Edge-by-edge check that the gadget is exactly its construction. Each entry
/// describes one problem; empty means clean.
std::vector<std::string> audit_gadget(const GadgetGraph& gadget);

/// `vertex role` lines.
void write_roles(std::ostream& out, const GadgetGraph& gadget);

/// Both sides of a reduction's defining claim, computed independently.
struct ClaimReport {
  bool holds = false;
  std::optional<int> source_optimum;
  std::optional<int> gadget_optimum;
  bool exact_cover = false;  // ex3c only
  int threshold = 0;         // ex3c only
  std::string summary() const;
};

/// Exact cover exists <=> gamma_kve(gadget) <= k + q + 3qk.
ClaimReport evaluate_ex3c_claim(const Ex3CInstance& inst, int k,
                                const OracleOptions& options = {});
bool check_ex3c_claim(const Ex3CInstance& inst, int k, const OracleOptions& options = {});

/// gamma_kve(G') = gamma_ve(G) + k.
ClaimReport evaluate_ve_to_kve_claim(const Graph& g, int k, const OracleOptions& options = {});
bool check_ve_to_kve_claim(const Graph& g, int k, const OracleOptions& options = {});

/// Minimum k-tuple dominating set of G and minimum k-ve dominating set of G'
/// agree, infeasibility included.
ClaimReport evaluate_ktuple_claim(const Graph& g, int k, const OracleOptions& options = {});
bool check_ktuple_claim(const Graph& g, int k, const OracleOptions& options = {});

}  // namespace kvedom
