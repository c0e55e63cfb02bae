#include "kvedom/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kvedom::io {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

int parse_int(const std::string& token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw InputError(std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

namespace {

// Yields the token lists of non-empty lines, tracking line numbers for errors.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens = tokenize(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

Graph read_edge_list(std::istream& in) {
  LineReader lines(in);
  std::vector<std::string> tok;
  if (!lines.next(tok)) throw InputError("empty graph file");
  if (tok.size() != 2) lines.fail("expected header 'n m'");
  const int n = parse_int(tok[0], "vertex count");
  const int m = parse_int(tok[1], "edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (lines.next(tok)) {
    if (tok.size() != 2) lines.fail("expected 'u v'");
    edges.push_back({parse_int(tok[0], "vertex id"), parse_int(tok[1], "vertex id")});
  }
  if (edges.size() != static_cast<std::size_t>(m)) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  int m = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind == "c") continue;
    std::vector<std::string> rest;
    for (std::string t; ls >> t;) rest.push_back(t);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (kind == "p") {
      if (n >= 0 || rest.size() != 3 || (rest[0] != "edge" && rest[0] != "col")) {
        throw InputError(where + "expected a single 'p edge n m' header");
      }
      n = parse_int(rest[1], "vertex count");
      m = parse_int(rest[2], "edge count");
    } else if (kind == "e") {
      if (n < 0) throw InputError(where + "edge before 'p' header");
      if (rest.size() != 2) throw InputError(where + "expected 'e u v'");
      const int u = parse_int(rest[0], "vertex id");
      const int v = parse_int(rest[1], "vertex id");
      if (u < 1 || v < 1) throw InputError(where + "DIMACS ids are 1-based");
      edges.push_back({u - 1, v - 1});
    } else {
      throw InputError(where + "unknown line type '" + kind + "'");
    }
  }
  if (n < 0) throw InputError("missing 'p edge n m' header");
  if (edges.size() != static_cast<std::size_t>(m)) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph read_graph(std::istream& in, Format format) {
  return format == Format::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph read_graph_file(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

VertexSet read_solution(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) header = tokenize(line);
  if (header.size() != 1) throw InputError("solution file must start with its cardinality");
  const int count = parse_int(header[0], "cardinality");
  std::vector<Vertex> members;
  while (std::getline(in, line)) {
    for (const auto& t : tokenize(line)) members.push_back(parse_int(t, "vertex id"));
  }
  VertexSet d(members);
  if (d.size() != members.size() || static_cast<int>(d.size()) != count) {
    throw InputError("solution lists " + std::to_string(members.size()) +
                     " distinct ids, header says " + std::to_string(count));
  }
  return d;
}

void write_solution(std::ostream& out, const VertexSet& d) {
  out << d.size() << '\n' << to_string(d) << '\n';
}

LabelSpec read_labels(std::istream& in) {
  LineReader lines(in);
  LabelSpec spec;
  std::vector<std::string> tok;
  while (lines.next(tok)) {
    if (tok.size() == 2 && tok[1] == "R") {
      spec.red.push_back(parse_int(tok[0], "vertex id"));
    } else if (tok.size() == 3) {
      spec.demands.push_back({parse_int(tok[0], "vertex id"), parse_int(tok[1], "vertex id"),
                              parse_int(tok[2], "demand")});
    } else {
      lines.fail("expected 'v R' or 'u v s'");
    }
  }
  return spec;
}

}  // namespace kvedom::io
