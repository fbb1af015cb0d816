#include "quadent/clique.hpp"

#include <stdexcept>

namespace quadent {

Graph::Graph(std::size_t n) : adj(n) {
  if (n > kMaxCliqueVertices) throw std::length_error("clique search supports at most 256 vertices");
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) return;
  adj[a].set(b);
  adj[b].set(a);
}

namespace {

struct Search {
  const Graph& g;
  std::size_t best = 0;
  std::size_t stop_at;  // a clique this large ends the search

  void expand(VertexSet p, std::size_t size) {
    if (best >= stop_at) return;
    if (p.none()) {
      if (size > best) best = size;
      return;
    }
    std::vector<std::size_t> order, colour;
    VertexSet uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      VertexSet avail = uncoloured;
      for (std::size_t v = avail._Find_first(); v < kMaxCliqueVertices; v = avail._Find_first()) {
        avail &= ~g.adj[v];
        avail.reset(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best) return;
      std::size_t v = order[i];
      expand(p & g.adj[v], size + 1);
      if (best >= stop_at) return;
      p.reset(v);
    }
  }
};

VertexSet all_vertices(const Graph& g) {
  VertexSet s;
  for (std::size_t i = 0; i < g.size(); ++i) s.set(i);
  return s;
}

std::size_t clique_in(const Graph& g, const VertexSet& p, std::size_t stop_at) {
  Search s{g, 0, stop_at};
  s.expand(p, 0);
  return s.best;
}

}  // namespace

std::size_t max_clique_size(const Graph& g) { return clique_in(g, all_vertices(g), kMaxCliqueVertices + 1); }

std::vector<std::size_t> lex_smallest_max_clique(const Graph& g) {
  const std::size_t omega = max_clique_size(g);
  std::vector<std::size_t> chosen;
  VertexSet cand = all_vertices(g);
  for (std::size_t v = 0; v < g.size() && chosen.size() < omega; ++v) {
    if (!cand[v]) continue;
    std::size_t need = omega - chosen.size() - 1;
    VertexSet next = cand & g.adj[v];
    if (need == 0 || clique_in(g, next, need) >= need) {
      chosen.push_back(v);
      cand = next;
    }
  }
  return chosen;
}

}  // namespace quadent
