#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pg {

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  std::span<const std::uint64_t> row(std::size_t i) const noexcept { return {bits_.data() + i * words_, words_}; }
  std::size_t row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Simple (di)graph on vertices 0..n-1 without self-loops. For undirected
// graphs the matrix is symmetric.
struct Graph {
  bool directed = false;
  BitMatrix adj;

  std::size_t vertex_count() const noexcept { return adj.size(); }
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return adj.test(u, v); }
  std::size_t edge_count() const;  // arcs for digraphs, edges otherwise
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // ascending; u < v when undirected
  std::vector<std::vector<std::uint32_t>> out_neighbours() const;
  std::vector<std::vector<std::uint32_t>> in_neighbours() const;

  static Graph undirected_from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
  static Graph directed_from_arcs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> arcs);

  // perm[v] is the new label of vertex v.
  Graph relabel(std::span<const std::uint32_t> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

}  // namespace pg
