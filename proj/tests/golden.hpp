#pragma once
// Runs the kvedom executable against the golden cases in tests/data/cli.
// A case is a directory holding `args` (one line; @DATA@ expands to the data
// directory), `stdout`, `exit` and optionally `stderr`.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kvedom/graph_io.hpp"

namespace kvedom::testing {

struct RunResult {
  int exit = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline RunResult run_cli(const std::string& exe, const std::string& args) {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path();
  const auto tag = std::to_string(::getpid());
  const auto out = dir / ("kvedom_golden_" + tag + ".out");
  const auto err = dir / ("kvedom_golden_" + tag + ".err");
  const std::string cmd = "'" + exe + "' " + args + " </dev/null >'" + out.string() + "' 2>'" +
                          err.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

struct CaseFailure {
  std::string name;
  std::string detail;
};

inline std::string expand(std::string args, const std::string& data) {
  for (auto pos = args.find("@DATA@"); pos != std::string::npos; pos = args.find("@DATA@")) {
    args.replace(pos, 6, data);
  }
  while (!args.empty() && (args.back() == '\n' || args.back() == ' ')) args.pop_back();
  return args;
}

/// Returns one entry per failing case; `count` receives the number of cases run.
inline std::vector<CaseFailure> run_golden(const std::string& exe, const std::string& data,
                                           int* count = nullptr) {
  namespace fs = std::filesystem;
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(fs::path(data) / "cli")) {
    if (entry.is_directory()) cases.push_back(entry.path());
  }
  std::sort(cases.begin(), cases.end());
  if (count) *count = static_cast<int>(cases.size());

  std::vector<CaseFailure> failures;
  for (const auto& c : cases) {
    const auto r = run_cli(exe, expand(slurp(c / "args"), data));
    const int want_exit = std::stoi(slurp(c / "exit"));
    const auto name = c.filename().string();
    if (r.exit != want_exit) {
      failures.push_back({name, "exit " + std::to_string(r.exit) + ", expected " +
                                    std::to_string(want_exit) + "; stderr: " + r.err});
    }
    if (r.out != slurp(c / "stdout")) failures.push_back({name, "stdout differs:\n" + r.out});
    if (fs::exists(c / "stderr") && r.err != slurp(c / "stderr")) {
      failures.push_back({name, "stderr differs:\n" + r.err});
    }
    if (want_exit == 1 && r.err.empty()) failures.push_back({name, "no diagnostic on stderr"});
  }

  // Same flags, same bytes; emitted graphs re-parse to themselves.
  const std::vector<std::string> repeat{
      "gen tree -n 300 --seed 11",
      "gen graph -n 40 -p 0.2 --seed 5",
      "gen tree -n 1 --seed 7",
      "solve --algo greedy -k 2 " + data + "/g40.txt",
      "solve --algo exact -k 2 " + data + "/p5.txt",
      "reduce ex3c -k 2 --roles - " + data + "/ex3c_q1.txt",
  };
  for (const auto& args : repeat) {
    const auto a = run_cli(exe, args);
    const auto b = run_cli(exe, args);
    if (a.exit != 0 || a.out != b.out || a.exit != b.exit) {
      failures.push_back({args, "not reproducible or failed: exit " + std::to_string(a.exit)});
    }
    if (args.rfind("gen ", 0) == 0) {
      std::istringstream in(a.out);
      try {
        if (io::to_edge_list(io::read_edge_list(in)) != a.out) {
          failures.push_back({args, "output does not round-trip"});
        }
      } catch (const std::exception& e) {
        failures.push_back({args, std::string("output does not parse: ") + e.what()});
      }
    }
  }
  if (count) *count += static_cast<int>(repeat.size());
  return failures;
}

}  // namespace kvedom::testing
