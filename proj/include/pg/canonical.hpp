#pragma once

// Canonical labelling of (di)graphs by colour refinement and
// individualisation-refinement search with automorphism pruning.

#include <cstdint>
#include <optional>
#include <vector>

#include "pg/graph.hpp"
#include "pg/power_graph.hpp"

namespace pg {

// color[v] is the class of v; classes are numbered 0..k-1.
struct Coloring {
  std::vector<std::uint32_t> color;

  static Coloring uniform(std::size_t n) { return Coloring{std::vector<std::uint32_t>(n, 0)}; }
  std::size_t class_count() const;
  std::vector<std::vector<std::uint32_t>> classes() const;
  bool is_discrete() const { return class_count() == color.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Coarsest equitable refinement of `initial`: vertices of one class have the
// same number of neighbours (for digraphs: of out- and in-neighbours) in
// every class. New classes are ordered by the initial class they came from
// and then by refinement keys, never by vertex labels.
Coloring color_refinement(const Graph& g, const Coloring& initial);
Coloring color_refinement(const PowerGraph& p, const Coloring& initial);

struct CanonicalForm {
  // Big-endian 32-bit n, then the adjacency bits of the relabelled graph in
  // row-major order (upper triangle for graphs, full matrix for digraphs),
  // most significant bit first.
  std::vector<std::uint8_t> bytes;
  // labeling[i] is the vertex placed at canonical position i.
  std::vector<std::uint32_t> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
};

struct CanonicalOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t automorphisms = 0;
};

// Throws SearchBudgetExceeded if the search tree exceeds the node budget.
CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& options = {},
                             SearchStats* stats = nullptr);
CanonicalForm canonical_form(const PowerGraph& p, const CanonicalOptions& options = {});

// map[v] is the image in the second graph of vertex v of the first. Every
// returned bijection has been checked edge by edge.
using VertexMapping = std::vector<std::uint32_t>;
std::optional<VertexMapping> are_isomorphic_graphs(const Graph& a, const Graph& b,
                                                   const CanonicalOptions& options = {});
std::optional<VertexMapping> are_isomorphic_graphs(const PowerGraph& a, const PowerGraph& b,
                                                   const CanonicalOptions& options = {});
// Uses precomputed canonical forms of the two graphs.
std::optional<VertexMapping> isomorphism_from_forms(const Graph& a, const CanonicalForm& ca,
                                                    const Graph& b, const CanonicalForm& cb);

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& map);

}  // namespace pg
