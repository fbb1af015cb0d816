#pragma once

#include <bitset>
#include <cstddef>
#include <vector>

namespace quadent {

inline constexpr std::size_t kMaxCliqueVertices = 256;
using VertexSet = std::bitset<kMaxCliqueVertices>;

struct Graph {
  explicit Graph(std::size_t n);
  std::size_t size() const { return adj.size(); }
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const { return adj[a][b]; }

  std::vector<VertexSet> adj;
};

// Exact maximum clique by branch and bound with a greedy colouring bound.
std::size_t max_clique_size(const Graph& g);
// The lexicographically smallest clique of maximum size, ascending.
std::vector<std::size_t> lex_smallest_max_clique(const Graph& g);

}  // namespace quadent
