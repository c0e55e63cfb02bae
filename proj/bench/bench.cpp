// Serial reference kernels against their OpenMP counterparts.

#include <omp.h>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <vector>

#include "kvedom/exact.hpp"
#include "kvedom/generators.hpp"
#include "kvedom/kernels.hpp"

namespace {

using namespace kvedom;
using Clock = std::chrono::steady_clock;

double median_seconds(int reps, const std::function<void()>& f) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    f();
    t.push_back(std::chrono::duration<double>(Clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %7.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kvedom kernel benchmark"};
  int n = 20000;
  double p = 0.001;
  int oracle_n = 44;
  int reps = 5;
  int threads = 0;
  std::uint64_t seed = 1;
  app.add_option("-n", n, "vertices for the kernel graphs")->check(CLI::PositiveNumber);
  app.add_option("-p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--oracle-n", oracle_n, "vertices for the oracle graph")
      ->check(CLI::PositiveNumber);
  app.add_option("--reps", reps, "repetitions; the median is reported")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)");
  app.add_option("--seed", seed, "seed");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  const Graph g = gen_random_graph(n, p, seed);
  std::vector<char> mask(static_cast<std::size_t>(g.order()));
  for (std::size_t v = 0; v < mask.size(); v += 3) mask[v] = 1;

  std::vector<int> a, b;
  const double cs = median_seconds(reps, [&] { a = kernels::serial::cover_counts(g, mask); });
  const double cp = median_seconds(reps, [&] { b = kernels::omp::cover_counts(g, mask); });
  row("cover_counts", cs, cp, a == b);

  std::vector<std::vector<EdgeId>> fa, fb;
  const double fs = median_seconds(reps, [&] { fa = kernels::serial::cover_families(g); });
  const double fp = median_seconds(reps, [&] { fb = kernels::omp::cover_families(g); });
  row("cover_families", fs, fp, fa == fb);

  const Graph h = gen_random_graph(oracle_n, 0.2, seed);
  auto problem = oracle::kve_problem(h, 2);
  const auto best = oracle::minimize(problem, {});
  if (!best.optimum) {
    std::printf("%-28s infeasible or over budget\n", "oracle");
    return 0;
  }
  constexpr auto kUnbounded = std::numeric_limits<std::uint64_t>::max();
  oracle::SearchOutcome sa, sb;
  const double os = median_seconds(
      reps, [&] { sa = oracle::serial::search_within(problem, *best.optimum, kUnbounded); });
  const double op = median_seconds(
      reps, [&] { sb = oracle::omp::search_within(problem, *best.optimum, kUnbounded); });
  row("oracle at optimum", os, op, sa.witness == sb.witness);
  if (*best.optimum > 0) {
    const int below = *best.optimum - 1;
    const double rs = median_seconds(
        reps, [&] { sa = oracle::serial::search_within(problem, below, kUnbounded); });
    const double rp = median_seconds(
        reps, [&] { sb = oracle::omp::search_within(problem, below, kUnbounded); });
    row("oracle below optimum", rs, rp, !sa.witness && !sb.witness);
  }
  return 0;
}
