#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pph {

// Digraph without self-loops. Vertices are 0..n-1.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::vector<int>& out_neighbors(int u) const { return out_[u]; }

  // Ordered pairs (u,v), lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Digraph& other) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;                 // n*n adjacency
  std::vector<std::vector<int>> out_;     // sorted out-neighbor lists
};

}  // namespace pph
