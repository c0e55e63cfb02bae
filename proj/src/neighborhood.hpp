#pragma once

#include <span>

#include "kvedom/graph.hpp"

namespace kvedom::detail {

// Ascending walk over N[v]: the sorted adjacency list with v merged in.
class ClosedCursor {
 public:
  ClosedCursor(const Graph& g, Vertex v) : adj_(g.neighbors(v)), self_(v) {}

  bool done() const { return !self_pending_ && i_ == adj_.size(); }

  Vertex peek() const {
    if (self_pending_ && (i_ == adj_.size() || self_ < adj_[i_])) return self_;
    return adj_[i_];
  }

  void advance() {
    if (self_pending_ && (i_ == adj_.size() || self_ < adj_[i_])) {
      self_pending_ = false;
    } else {
      ++i_;
    }
  }

 private:
  std::span<const Vertex> adj_;
  Vertex self_;
  std::size_t i_ = 0;
  bool self_pending_ = true;
};

// Calls f(x) once for every x in N[u] ∪ N[v], ascending.
template <class F>
void for_each_in_cover(const Graph& g, Vertex u, Vertex v, F&& f) {
  ClosedCursor a(g, u);
  ClosedCursor b(g, v);
  while (!a.done() || !b.done()) {
    Vertex x;
    if (b.done() || (!a.done() && a.peek() < b.peek())) {
      x = a.peek();
      a.advance();
    } else if (a.done() || b.peek() < a.peek()) {
      x = b.peek();
      b.advance();
    } else {
      x = a.peek();
      a.advance();
      b.advance();
    }
    f(x);
  }
}

}  // namespace kvedom::detail
