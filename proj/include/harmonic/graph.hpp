#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmonic {

using Vertex = std::uint32_t;

// Simple undirected graph over the dense vertex set 0..order()-1.
//
// Adjacency lists are kept sorted and duplicate-free; every edge is stored
// in both endpoint lists. Analysis routines only take `const Graph&`, so a
// finished graph can be shared across worker threads.
class Graph {
 public:
  explicit Graph(std::size_t order) {
    if (order == 0) throw std::invalid_argument("graph must have at least one vertex");
    adjacency_.resize(order);
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  // Idempotent: adding an existing edge leaves the graph unchanged.
  Graph& add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (insert_sorted(adjacency_[u], v)) {
      insert_sorted(adjacency_[v], u);
      ++edge_count_;
    }
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  std::span<const Vertex> neighbors(Vertex u) const {
    check_vertex(u);
    return adjacency_[u];
  }

  std::size_t degree(Vertex u) const { return neighbors(u).size(); }

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex u) const {
    if (u >= adjacency_.size()) {
      throw std::out_of_range("vertex " + std::to_string(u) + " outside [0, " +
                              std::to_string(adjacency_.size()) + ")");
    }
  }

  static bool insert_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace harmonic
