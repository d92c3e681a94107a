#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

// Power graph of a group on its element indices. `arcs` has a -> b iff
// b = a^m for some m >= 1 and a != b; `undirected` is its symmetrisation.
struct PowerGraph {
  Graph arcs;
  Graph undirected;
  bool directed = false;
  std::vector<std::uint32_t> element_orders;

  const Graph& graph() const noexcept { return directed ? arcs : undirected; }
  std::size_t vertex_count() const noexcept { return undirected.vertex_count(); }
};

// Built by walking each cyclic subgroup <a>, O(sum of element orders).
PowerGraph power_graph(const Group& g, bool directed = false);

// Number of y with y^2 = x.
std::size_t square_root_count(const Group& g, Element x);

// For every element x, order(y) -> #{y : y^k = x}.
using RootProfile = std::vector<std::map<std::uint32_t, std::size_t>>;
RootProfile root_profile(const Group& g, unsigned k = 2);

// Sorted multiset of (element order, square-root count); equal for groups
// with isomorphic power graphs.
std::vector<std::pair<std::uint32_t, std::size_t>> square_root_signature(const Group& g);

// {y^m : y^k = x and order(y) = root_order}.
std::vector<Element> root_power_set(const Group& g, Element x, unsigned k, std::uint32_t root_order, unsigned m);

// Power graph of G x A for a 2-group G and an elementary abelian 2-group A,
// decided from powers in G alone: (a,x) ~ (b,y) iff
//   x = y = 1 and one of a, b is a power of the other;
//   x = y != 1 and b is an odd power of a;
//   x != 1, y = 1 and b is an even power of a (or symmetrically).
// Vertex (a, x) is a * |A| + x, matching direct_product.
PowerGraph product_adjacency_2group(const Group& g, const Group& a);

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const PowerGraph& p);
bool is_connected(const PowerGraph& p);

std::size_t count_triangles(const Graph& g, std::span<const std::uint32_t> vertices);

// One "u v" line per edge (or arc), ascending.
std::string edge_list(const Graph& g);
// DOT with element orders as vertex labels.
std::string to_dot(const PowerGraph& p, const std::string& name = "P");

}  // namespace pg
