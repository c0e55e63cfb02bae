// kvedom: solve, verify, reduce and generate k-ve domination instances.
//
// Exit status: 0 solved / valid / claim holds, 2 infeasible / invalid / claim
// fails, 1 on any error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kvedom/exact.hpp"
#include "kvedom/generators.hpp"
#include "kvedom/graph.hpp"
#include "kvedom/graph_io.hpp"
#include "kvedom/greedy.hpp"
#include "kvedom/reductions.hpp"
#include "kvedom/tree_solver.hpp"

namespace {

using namespace kvedom;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

struct Input {
  std::string path = "-";
  std::string format = "edgelist";
};

// "-" reads standard input.
template <typename F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return f(in);
}

Graph load_graph(const Input& in) {
  const auto fmt = in.format == "dimacs" ? io::Format::Dimacs : io::Format::EdgeList;
  return with_input(in.path, [fmt](std::istream& s) { return io::read_graph(s, fmt); });
}

void add_input(CLI::App* cmd, Input& in, const char* what = "graph file, - for stdin") {
  cmd->add_option("input", in.path, what);
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
}

// Writes to `path`, or stdout when it is empty or "-".
template <typename F>
void with_output(const std::string& path, F&& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  f(out);
}

OracleOptions oracle_options(const std::optional<std::uint64_t>& budget) {
  OracleOptions opts;
  opts.budget = budget;
  return opts;
}

STLabeling labels_for(const Graph& g, int k, const std::string& path) {
  auto labels = STLabeling::uniform(g, k);
  if (path.empty()) return labels;
  const auto spec = with_input(path, [](std::istream& s) { return io::read_labels(s); });
  for (Vertex v : spec.red) {
    if (!g.contains(v)) throw InputError("label for unknown vertex " + std::to_string(v));
    labels.t[static_cast<std::size_t>(v)] = Label::R;
  }
  for (const auto& d : spec.demands) {
    auto e = g.find_edge(d.u, d.v);
    if (!e) {
      throw InputError("demand on non-edge " + std::to_string(d.u) + " " + std::to_string(d.v));
    }
    labels.s[*e] = d.s;
  }
  return labels;
}

struct SolveArgs {
  Input in;
  std::string algo = "tree";
  int k = 1;
  std::string labels;
  Vertex root = 0;
  std::optional<std::uint64_t> budget;
};

int run_solve(const SolveArgs& a) {
  const Graph g = load_graph(a.in);
  if (!a.labels.empty() && a.algo != "tree") throw InputError("--labels needs --algo tree");
  std::optional<VertexSet> d;
  if (a.algo == "tree") {
    d = solve_st_forest(g, labels_for(g, a.k, a.labels), a.root);
  } else if (a.algo == "greedy") {
    d = approx_kve(g, a.k);
  } else {
    auto r = exact_kve(g, a.k, oracle_options(a.budget));
    if (r.optimum) d = r.witness;
  }
  if (!d) {
    std::cout << "INFEASIBLE\n";
    return kNegative;
  }
  io::write_solution(std::cout, *d);
  return kOk;
}

struct VerifyArgs {
  Input in;
  std::string solution;
  int k = 1;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = load_graph(a.in);
  const auto d = with_input(a.solution, [](std::istream& s) { return io::read_solution(s); });
  if (!d.valid_for(g)) throw InputError("solution names a vertex outside the graph");
  if (auto e = first_violated_edge(g, d, a.k)) {
    const auto& edge = g.edge(*e);
    std::cout << "INVALID " << edge.u << ' ' << edge.v << '\n';
    return kNegative;
  }
  std::cout << "VALID\n";
  return kOk;
}

struct ReduceArgs {
  std::string kind;
  Input in;
  int k = 2;
  std::string output;
  std::string roles;
  bool check = false;
  std::optional<std::uint64_t> budget;
};

GadgetGraph build(const ReduceArgs& a, ClaimReport* report) {
  const auto opts = oracle_options(a.budget);
  if (a.kind == "ex3c") {
    const auto inst = with_input(a.in.path, [](std::istream& s) { return read_ex3c(s); });
    if (report) *report = evaluate_ex3c_claim(inst, a.k, opts);
    return build_ex3c_gadget(inst, a.k);
  }
  const Graph g = load_graph(a.in);
  if (a.kind == "ve2kve") {
    if (report) *report = evaluate_ve_to_kve_claim(g, a.k, opts);
    return build_ve_to_kve(g, a.k);
  }
  if (report) *report = evaluate_ktuple_claim(g, a.k, opts);
  return build_ktuple_to_kve(g);
}

int run_reduce(const ReduceArgs& a) {
  ClaimReport report;
  const auto gadget = build(a, a.check ? &report : nullptr);
  with_output(a.output, [&](std::ostream& out) { io::write_edge_list(out, gadget.graph); });
  std::string roles = a.roles;
  if (roles.empty() && !a.output.empty() && a.output != "-") roles = a.output + ".roles";
  if (!roles.empty()) {
    with_output(roles, [&](std::ostream& out) { write_roles(out, gadget); });
  }
  if (!a.check) return kOk;
  std::cerr << report.summary() << '\n';
  return report.holds ? kOk : kNegative;
}

int run_check_claim(const ReduceArgs& a) {
  ClaimReport report;
  build(a, &report);
  std::cout << report.summary() << '\n';
  return report.holds ? kOk : kNegative;
}

struct GenArgs {
  std::string kind;
  int n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const Graph g = a.kind == "tree" ? gen_random_tree(a.n, a.seed)
                                   : gen_random_graph(a.n, a.p, a.seed);
  with_output(a.output, [&](std::ostream& out) { io::write_edge_list(out, g); });
  return kOk;
}

void add_budget(CLI::App* cmd, std::optional<std::uint64_t>& budget) {
  cmd->add_option("--budget", budget, "oracle node budget (default: $KVEDOM_BUDGET or 200000000)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-vertex-edge domination toolkit"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "minimum or approximate k-ve dominating set");
  add_input(cmd_solve, solve.in);
  cmd_solve->add_option("--algo", solve.algo, "tree, greedy or exact")
      ->check(CLI::IsMember({"tree", "greedy", "exact"}));
  cmd_solve->add_option("-k", solve.k, "demand per edge")->check(CLI::PositiveNumber);
  cmd_solve->add_option("--labels", solve.labels, "(s,t) labels: `v R` and `u v s` lines");
  cmd_solve->add_option("--root", solve.root, "root for the tree algorithm")
      ->check(CLI::NonNegativeNumber);
  add_budget(cmd_solve, solve.budget);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "check a k-ve dominating set");
  cmd_verify->add_option("input", verify.in.path, "graph file")->required();
  cmd_verify->add_option("solution", verify.solution, "solution file")->required();
  cmd_verify->add_option("--format", verify.in.format, "input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  cmd_verify->add_option("-k", verify.k, "demand per edge")->check(CLI::PositiveNumber);

  ReduceArgs reduce;
  auto* cmd_reduce = app.add_subcommand("reduce", "build a reduction gadget");
  cmd_reduce->add_option("kind", reduce.kind, "ex3c, ve2kve or ktuple2kve")
      ->required()
      ->check(CLI::IsMember({"ex3c", "ve2kve", "ktuple2kve"}));
  add_input(cmd_reduce, reduce.in, "instance file, - for stdin");
  cmd_reduce->add_option("-k", reduce.k, "k of the target problem")->check(CLI::PositiveNumber);
  cmd_reduce->add_option("-o,--output", reduce.output, "gadget edge list (default stdout)");
  cmd_reduce->add_option("--roles", reduce.roles, "role map (default OUTPUT.roles)");
  cmd_reduce->add_flag("--check", reduce.check, "also test the reduction's claim");
  add_budget(cmd_reduce, reduce.budget);

  ReduceArgs claim;
  auto* cmd_claim = app.add_subcommand("check-claim", "test a reduction's claim on one instance");
  cmd_claim->add_option("kind", claim.kind, "ex3c, ve2kve or ktuple2kve")
      ->required()
      ->check(CLI::IsMember({"ex3c", "ve2kve", "ktuple2kve"}));
  add_input(cmd_claim, claim.in, "instance file, - for stdin");
  cmd_claim->add_option("-k", claim.k, "k of the target problem")->check(CLI::PositiveNumber);
  add_budget(cmd_claim, claim.budget);

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "random tree or G(n,p) graph");
  cmd_gen->add_option("kind", gen.kind, "tree or graph")
      ->required()
      ->check(CLI::IsMember({"tree", "graph"}));
  cmd_gen->add_option("-n", gen.n, "vertices")->check(CLI::PositiveNumber);
  cmd_gen->add_option("-p", gen.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  cmd_gen->add_option("--seed", gen.seed, "seed");
  cmd_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*cmd_solve) return run_solve(solve);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_reduce) return run_reduce(reduce);
    if (*cmd_claim) return run_check_claim(claim);
    return run_gen(gen);
  } catch (const std::exception& e) {
    std::cerr << "kvedom: " << e.what() << '\n';
    return kError;
  }
}
