#include "kvedom/reductions.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "kvedom/graph_io.hpp"

namespace kvedom {

void Ex3CInstance::validate() const {
  if (q < 1) throw InputError("Ex3C instance needs q >= 1");
  for (std::size_t j = 0; j < collection.size(); ++j) {
    auto s = collection[j];
    for (int x : s) {
      if (x < 0 || x >= universe()) {
        throw InputError("subset " + std::to_string(j) + " has element " + std::to_string(x) +
                         " outside [0, " + std::to_string(universe()) + ")");
      }
    }
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) {
      throw InputError("subset " + std::to_string(j) + " repeats an element");
    }
  }
}

Ex3CInstance read_ex3c(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    auto tok = io::tokenize(line);
    if (!tok.empty()) rows.push_back(std::move(tok));
  }
  if (rows.empty() || rows[0].size() != 2) throw InputError("expected header 'q m'");
  Ex3CInstance inst;
  inst.q = io::parse_int(rows[0][0], "q");
  const int m = io::parse_int(rows[0][1], "subset count");
  if (rows.size() != static_cast<std::size_t>(m) + 1) {
    throw InputError("header announces " + std::to_string(m) + " subsets, found " +
                     std::to_string(rows.size() - 1));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 3) throw InputError("every subset needs exactly 3 elements");
    inst.collection.push_back({io::parse_int(rows[r][0], "element"),
                               io::parse_int(rows[r][1], "element"),
                               io::parse_int(rows[r][2], "element")});
  }
  inst.validate();
  return inst;
}

bool has_exact_cover(const Ex3CInstance& inst) {
  inst.validate();
  std::vector<char> covered(static_cast<std::size_t>(inst.universe()), 0);
  std::function<bool(int)> search = [&](int remaining) {
    if (remaining == 0) return true;
    const auto first = static_cast<int>(std::find(covered.begin(), covered.end(), 0) -
                                        covered.begin());
    for (const auto& s : inst.collection) {
      if (std::find(s.begin(), s.end(), first) == s.end()) continue;
      if (std::any_of(s.begin(), s.end(),
                      [&](int x) { return covered[static_cast<std::size_t>(x)] != 0; })) {
        continue;
      }
      for (int x : s) covered[static_cast<std::size_t>(x)] = 1;
      const bool ok = search(remaining - 1);
      for (int x : s) covered[static_cast<std::size_t>(x)] = 0;
      if (ok) return true;
    }
    return false;
  };
  return search(inst.q);
}

std::string to_string(const VertexRole& r) {
  const auto i = std::to_string(r.index);
  switch (r.role) {
    case Role::Element: return "a" + i;
    case Role::Subset: return "b" + i;
    case Role::Bridge: return "p" + i;
    case Role::V: return "v";
    case Role::U: return "u";
    case Role::Guard: return "y" + i;
    case Role::GuardClique: return "q" + i + "." + std::to_string(r.member);
    case Role::Z: return "z" + i;
    case Role::L: return "l" + i;
    case Role::Original: return "g" + i;
    case Role::Clique: return "c" + i;
    case Role::Pendant: return "u" + i;
  }
  return "?";
}

const char* to_string(Reduction r) {
  switch (r) {
    case Reduction::Ex3C: return "ex3c";
    case Reduction::VeToKve: return "ve2kve";
    case Reduction::KtupleToKve: return "ktuple2kve";
  }
  return "?";
}

namespace {

struct Builder {
  std::vector<VertexRole> roles;
  std::vector<Edge> edges;

  Vertex add(Role role, int index = 0, int member = 0) {
    roles.push_back({role, index, member});
    return static_cast<Vertex>(roles.size() - 1);
  }
  std::vector<Vertex> add_block(Role role, int count) {
    std::vector<Vertex> out;
    for (int i = 0; i < count; ++i) out.push_back(add(role, i));
    return out;
  }
  void join(Vertex a, Vertex b) { edges.push_back({a, b}); }
  void clique(const std::vector<Vertex>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) join(xs[i], xs[j]);
    }
  }
  void complete(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
    for (Vertex x : xs) {
      for (Vertex y : ys) join(x, y);
    }
  }
  Graph graph() const { return Graph(static_cast<int>(roles.size()), edges); }
};

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

GadgetGraph build_ex3c_gadget(const Ex3CInstance& inst, int k) {
  inst.validate();
  if (k < 2) throw InputError("the Ex3C gadget needs k >= 2");
  const int n3 = inst.universe();
  const int m = static_cast<int>(inst.collection.size());

  Builder b;
  auto a = b.add_block(Role::Element, n3);
  auto bs = b.add_block(Role::Subset, m);
  auto p = b.add_block(Role::Bridge, k - 2);
  const Vertex v = b.add(Role::V);
  const Vertex u = b.add(Role::U);
  auto y = b.add_block(Role::Guard, n3);
  std::vector<std::vector<Vertex>> q(static_cast<std::size_t>(n3));
  for (int i = 0; i < n3; ++i) {
    auto& block = q[static_cast<std::size_t>(i)];
    for (int j = 0; j < k - 1; ++j) block.push_back(b.add(Role::GuardClique, i, j));
  }
  auto z = b.add_block(Role::Z, n3);
  auto l = b.add_block(Role::L, n3);

  b.clique(bs);
  for (int j = 0; j < m; ++j) {
    auto s = inst.collection[static_cast<std::size_t>(j)];
    std::sort(s.begin(), s.end());
    for (int x : s) b.join(a[static_cast<std::size_t>(x)], bs[static_cast<std::size_t>(j)]);
  }
  b.clique(p);
  b.complete(p, bs);
  b.join(u, v);
  b.complete({v}, p);
  for (int i = 0; i < n3; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    b.join(y[ii], a[ii]);
    b.clique(q[ii]);
    b.complete({y[ii]}, q[ii]);
    b.join(z[ii], l[ii]);
    b.complete({z[ii]}, q[ii]);
  }

  GadgetGraph out{b.graph(), std::move(b.roles), {}, inst, std::nullopt};
  out.provenance = {Reduction::Ex3C, k, inst.q, m, 0, 0, ""};
  if (k == 2) out.provenance.note = "k = 2: P is empty and {u, v} forms its own component";
  return out;
}

GadgetGraph build_ve_to_kve(const Graph& g, int k) {
  if (k < 2) throw InputError("the ve reduction needs k >= 2");
  Builder b;
  std::vector<Vertex> orig;
  for (Vertex x = 0; x < g.order(); ++x) orig.push_back(b.add(Role::Original, x));
  auto c = b.add_block(Role::Clique, k - 1);
  const Vertex v = b.add(Role::V);
  const Vertex u = b.add(Role::U);
  for (const auto& e : g.edges()) b.join(e.u, e.v);
  b.complete(orig, c);
  b.clique(c);
  b.complete({v}, c);
  b.join(v, u);

  GadgetGraph out{b.graph(), std::move(b.roles), {}, std::nullopt, g};
  out.provenance = {Reduction::VeToKve, k, 0, 0, g.order(), g.max_degree(), ""};
  return out;
}

GadgetGraph build_ktuple_to_kve(const Graph& g) {
  Builder b;
  for (Vertex x = 0; x < g.order(); ++x) b.add(Role::Original, x);
  for (Vertex x = 0; x < g.order(); ++x) b.add(Role::Pendant, x);
  for (const auto& e : g.edges()) b.join(e.u, e.v);
  for (Vertex x = 0; x < g.order(); ++x) b.join(x, g.order() + x);

  GadgetGraph out{b.graph(), std::move(b.roles), {}, std::nullopt, g};
  out.provenance = {Reduction::KtupleToKve, 0, 0, 0, g.order(), g.max_degree(),
                    "source assumed to have max degree <= k + 2 and k >= 2 (not enforced)"};
  return out;
}

namespace {

struct Rule {
  const char* name;
  std::function<bool(const VertexRole&, const VertexRole&)> matches;
  long long expected;
};

bool pair_is(const VertexRole& x, const VertexRole& y, Role a, Role b) {
  return x.role == a && y.role == b;
}

std::vector<Rule> rules_for(const GadgetGraph& gadget) {
  const auto& pv = gadget.provenance;
  const int k = pv.k;
  std::vector<Rule> rules;
  auto sym = [](Role a, Role b, std::function<bool(const VertexRole&, const VertexRole&)> extra) {
    return [a, b, extra](const VertexRole& x, const VertexRole& y) {
      return (pair_is(x, y, a, b) && extra(x, y)) || (a != b && pair_is(y, x, a, b) && extra(y, x));
    };
  };
  auto any = [](const VertexRole&, const VertexRole&) { return true; };
  auto same_index = [](const VertexRole& x, const VertexRole& y) { return x.index == y.index; };

  switch (pv.kind) {
    case Reduction::Ex3C: {
      const auto& inst = *gadget.ex3c_source;
      const int n3 = inst.universe();
      const int m = static_cast<int>(inst.collection.size());
      auto member = [&inst](const VertexRole& a, const VertexRole& b) {
        const auto& s = inst.collection[static_cast<std::size_t>(b.index)];
        return std::find(s.begin(), s.end(), a.index) != s.end();
      };
      rules.push_back({"B clique", sym(Role::Subset, Role::Subset, any), choose2(m)});
      rules.push_back({"element in subset", sym(Role::Element, Role::Subset, member), 3LL * m});
      rules.push_back({"P clique", sym(Role::Bridge, Role::Bridge, any), choose2(k - 2)});
      rules.push_back({"P joined to B", sym(Role::Bridge, Role::Subset, any), 1LL * (k - 2) * m});
      rules.push_back({"pendant path u-v", sym(Role::U, Role::V, any), 1});
      rules.push_back({"v joined to P", sym(Role::V, Role::Bridge, any), k - 2});
      rules.push_back({"y_i - a_i", sym(Role::Guard, Role::Element, same_index), n3});
      rules.push_back({"Q_i clique", sym(Role::GuardClique, Role::GuardClique, same_index),
                       1LL * n3 * choose2(k - 1)});
      rules.push_back({"y_i joined to Q_i", sym(Role::Guard, Role::GuardClique, same_index),
                       1LL * n3 * (k - 1)});
      rules.push_back({"z_i - l_i", sym(Role::Z, Role::L, same_index), n3});
      rules.push_back({"z_i joined to Q_i", sym(Role::Z, Role::GuardClique, same_index),
                       1LL * n3 * (k - 1)});
      break;
    }
    case Reduction::VeToKve: {
      const auto& src = *gadget.graph_source;
      auto in_source = [&src](const VertexRole& a, const VertexRole& b) {
        return src.has_edge(a.index, b.index);
      };
      rules.push_back({"source edge", sym(Role::Original, Role::Original, in_source),
                       static_cast<long long>(src.size())});
      rules.push_back({"source joined to C", sym(Role::Original, Role::Clique, any),
                       1LL * src.order() * (k - 1)});
      rules.push_back({"C clique", sym(Role::Clique, Role::Clique, any), choose2(k - 1)});
      rules.push_back({"v joined to C", sym(Role::V, Role::Clique, any), k - 1});
      rules.push_back({"pendant u-v", sym(Role::U, Role::V, any), 1});
      break;
    }
    case Reduction::KtupleToKve: {
      const auto& src = *gadget.graph_source;
      auto in_source = [&src](const VertexRole& a, const VertexRole& b) {
        return src.has_edge(a.index, b.index);
      };
      rules.push_back({"source edge", sym(Role::Original, Role::Original, in_source),
                       static_cast<long long>(src.size())});
      rules.push_back({"pendant u_i - v_i", sym(Role::Original, Role::Pendant, same_index),
                       src.order()});
      break;
    }
  }
  return rules;
}

}  // namespace

std::vector<std::string> audit_gadget(const GadgetGraph& gadget) {
  std::vector<std::string> problems;
  const auto& g = gadget.graph;
  if (gadget.roles.size() != static_cast<std::size_t>(g.order())) {
    problems.push_back("role map does not cover every vertex");
    return problems;
  }
  auto rules = rules_for(gadget);
  std::vector<long long> seen(rules.size(), 0);
  for (const auto& e : g.edges()) {
    const auto& x = gadget.roles[static_cast<std::size_t>(e.u)];
    const auto& y = gadget.roles[static_cast<std::size_t>(e.v)];
    int hits = 0;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (rules[r].matches(x, y)) {
        ++hits;
        ++seen[r];
      }
    }
    if (hits != 1) {
      problems.push_back("edge " + to_string(x) + "-" + to_string(y) + " matches " +
                         std::to_string(hits) + " construction rules");
    }
  }
  for (std::size_t r = 0; r < rules.size(); ++r) {
    if (seen[r] != rules[r].expected) {
      problems.push_back(std::string(rules[r].name) + ": " + std::to_string(seen[r]) +
                         " edges, expected " + std::to_string(rules[r].expected));
    }
  }
  return problems;
}

void write_roles(std::ostream& out, const GadgetGraph& gadget) {
  for (std::size_t v = 0; v < gadget.roles.size(); ++v) {
    out << v << ' ' << to_string(gadget.roles[v]) << '\n';
  }
}

std::string ClaimReport::summary() const {
  std::ostringstream out;
  auto show = [&out](const std::optional<int>& x) {
    if (x) {
      out << *x;
    } else {
      out << "infeasible";
    }
  };
  out << (holds ? "PASS" : "FAIL");
  if (threshold > 0) {
    out << " exact_cover=" << (exact_cover ? "yes" : "no") << " gadget_optimum=";
    show(gadget_optimum);
    out << " threshold=" << threshold;
  } else {
    out << " source_optimum=";
    show(source_optimum);
    out << " gadget_optimum=";
    show(gadget_optimum);
  }
  return out.str();
}

ClaimReport evaluate_ex3c_claim(const Ex3CInstance& inst, int k, const OracleOptions& options) {
  auto gadget = build_ex3c_gadget(inst, k);
  ClaimReport report;
  report.exact_cover = has_exact_cover(inst);
  report.threshold = k + inst.q + 3 * inst.q * k;
  report.gadget_optimum = exact_kve(gadget.graph, k, options).optimum;
  const bool small = report.gadget_optimum && *report.gadget_optimum <= report.threshold;
  report.holds = report.exact_cover == small;
  return report;
}

bool check_ex3c_claim(const Ex3CInstance& inst, int k, const OracleOptions& options) {
  return evaluate_ex3c_claim(inst, k, options).holds;
}

ClaimReport evaluate_ve_to_kve_claim(const Graph& g, int k, const OracleOptions& options) {
  auto gadget = build_ve_to_kve(g, k);
  ClaimReport report;
  report.source_optimum = exact_ve(g, options).optimum;
  report.gadget_optimum = exact_kve(gadget.graph, k, options).optimum;
  report.holds = report.source_optimum && report.gadget_optimum &&
                 *report.gadget_optimum == *report.source_optimum + k;
  return report;
}

bool check_ve_to_kve_claim(const Graph& g, int k, const OracleOptions& options) {
  return evaluate_ve_to_kve_claim(g, k, options).holds;
}

ClaimReport evaluate_ktuple_claim(const Graph& g, int k, const OracleOptions& options) {
  auto gadget = build_ktuple_to_kve(g);
  ClaimReport report;
  report.source_optimum = exact_ktuple(g, k, options).optimum;
  report.gadget_optimum = exact_kve(gadget.graph, k, options).optimum;
  report.holds = report.source_optimum == report.gadget_optimum;
  return report;
}

bool check_ktuple_claim(const Graph& g, int k, const OracleOptions& options) {
  return evaluate_ktuple_claim(g, k, options).holds;
}

}  // namespace kvedom
