#include "pg/graph.hpp"

namespace pg {

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < vertex_count(); ++i) c += adj.row_count(i);
  return directed ? c : c / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = directed ? 0 : u + 1; v < vertex_count(); ++v)
      if (adj.test(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<std::uint32_t>> Graph::out_neighbours() const {
  std::vector<std::vector<std::uint32_t>> nb(vertex_count());
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (adj.test(u, v)) nb[u].push_back(static_cast<std::uint32_t>(v));
  return nb;
}

std::vector<std::vector<std::uint32_t>> Graph::in_neighbours() const {
  std::vector<std::vector<std::uint32_t>> nb(vertex_count());
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (adj.test(u, v)) nb[v].push_back(static_cast<std::uint32_t>(u));
  return nb;
}

Graph Graph::undirected_from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g{false, BitMatrix(n)};
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adj.set(u, v);
    g.adj.set(v, u);
  }
  return g;
}

Graph Graph::directed_from_arcs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> arcs) {
  Graph g{true, BitMatrix(n)};
  for (auto [u, v] : arcs)
    if (u != v) g.adj.set(u, v);
  return g;
}

Graph Graph::relabel(std::span<const std::uint32_t> perm) const {
  Graph g{directed, BitMatrix(vertex_count())};
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (adj.test(u, v)) g.adj.set(perm[u], perm[v]);
  return g;
}

}  // namespace pg
