#include "pg/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pg/error.hpp"

namespace pg {

std::size_t Coloring::class_count() const {
  std::uint32_t k = 0;
  for (auto c : color) k = std::max(k, c + 1);
  return color.empty() ? 0 : k;
}

std::vector<std::vector<std::uint32_t>> Coloring::classes() const {
  std::vector<std::vector<std::uint32_t>> out(class_count());
  for (std::uint32_t v = 0; v < color.size(); ++v) out[color[v]].push_back(v);
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Ordered partition of the vertices into contiguous cells of `lab`. A cell is
// named by its first position; end[start] is one past its last position.
struct Partition {
  std::vector<std::uint32_t> lab, pos, cell, end;
  std::uint32_t cells = 0;

  std::size_t size() const { return lab.size(); }
  bool discrete() const { return cells == lab.size(); }

  static Partition from_coloring(const Coloring& c) {
    std::size_t n = c.color.size();
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), 0u);
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return c.color[a] < c.color[b]; });
    p.pos.resize(n);
    p.cell.resize(n);
    p.end.assign(n, 0);
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && c.color[p.lab[j]] == c.color[p.lab[i]]) ++j;
      p.end[i] = static_cast<std::uint32_t>(j);
      for (std::size_t k = i; k < j; ++k) {
        p.cell[p.lab[k]] = static_cast<std::uint32_t>(i);
        p.pos[p.lab[k]] = static_cast<std::uint32_t>(k);
      }
      ++p.cells;
      i = j;
    }
    return p;
  }

  std::vector<std::uint32_t> cell_starts() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < size(); i = end[i]) s.push_back(i);
    return s;
  }

  Coloring to_coloring() const {
    Coloring c{std::vector<std::uint32_t>(size())};
    std::uint32_t id = 0;
    for (std::uint32_t i = 0; i < size(); i = end[i], ++id)
      for (std::uint32_t k = i; k < end[i]; ++k) c.color[lab[k]] = id;
    return c;
  }

  // Splits v off the front of its cell; returns the new singleton cell.
  std::uint32_t individualize(std::uint32_t v) {
    std::uint32_t s = cell[v], e = end[s];
    std::uint32_t u = lab[s];
    lab[pos[v]] = u;
    pos[u] = pos[v];
    lab[s] = v;
    pos[v] = s;
    end[s] = s + 1;
    end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) cell[lab[i]] = s + 1;
    ++cells;
    return s;
  }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : n_(g.vertex_count()), directed_(g.directed), out_(g.out_neighbours()),
        key_(n_, 0), mark_(n_, 0), in_queue_(n_, 0) {
    if (directed_) in_ = g.in_neighbours();
  }

  // Refines p to the coarsest equitable partition below it, starting from the
  // given splitter cells. Returns a hash of the sequence of splits, which is
  // invariant under relabelling of the graph.
  std::uint64_t refine(Partition& p, std::span<const std::uint32_t> splitters) {
    std::uint64_t h = 0x2545f4914f6cdd1dull;
    queue_.clear();
    for (auto s : splitters) {
      if (!in_queue_[s]) {
        in_queue_[s] = 1;
        queue_.push_back(s);
      }
    }
    for (std::size_t head = 0; head < queue_.size() && !p.discrete(); ++head) {
      std::uint32_t w = queue_[head];
      in_queue_[w] = 0;
      members_.assign(p.lab.begin() + w, p.lab.begin() + p.end[w]);
      touched_.clear();
      for (auto u : members_) {
        for (auto v : out_[u]) {
          if (key_[v] == 0) touched_.push_back(v);
          key_[v] += 1;
        }
        if (directed_) {
          for (auto v : in_[u]) {
            if (key_[v] == 0) touched_.push_back(v);
            key_[v] += std::uint64_t{1} << 32;
          }
        }
      }
      cells_.clear();
      for (auto v : touched_) {
        std::uint32_t s = p.cell[v];
        if (!mark_[s]) {
          mark_[s] = 1;
          cells_.push_back(s);
        }
      }
      std::sort(cells_.begin(), cells_.end());
      for (auto s : cells_) {
        mark_[s] = 0;
        h = split(p, s, h);
      }
      for (auto v : touched_) key_[v] = 0;
    }
    for (std::size_t i = 0; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
    return mix(h, p.cells);
  }

 private:
  std::uint64_t split(Partition& p, std::uint32_t s, std::uint64_t h) {
    std::uint32_t e = p.end[s];
    if (e - s == 1) return h;
    auto first = p.lab.begin() + s, last = p.lab.begin() + e;
    auto [lo, hi] = std::minmax_element(first, last, [&](std::uint32_t a, std::uint32_t b) { return key_[a] < key_[b]; });
    if (key_[*lo] == key_[*hi]) return h;
    std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) { return key_[a] < key_[b]; });

    bool was_queued = in_queue_[s];
    frags_.clear();
    for (std::uint32_t i = s; i < e;) {
      std::uint32_t j = i;
      while (j < e && key_[p.lab[j]] == key_[p.lab[i]]) ++j;
      frags_.push_back({i, j});
      h = mix(mix(mix(h, s), j - i), key_[p.lab[i]]);
      i = j;
    }
    for (auto [fs, fe] : frags_) {
      p.end[fs] = fe;
      for (std::uint32_t i = fs; i < fe; ++i) {
        p.cell[p.lab[i]] = fs;
        p.pos[p.lab[i]] = i;
      }
    }
    p.cells += static_cast<std::uint32_t>(frags_.size() - 1);

    std::size_t skip = frags_.size();
    if (!was_queued) {
      skip = 0;
      for (std::size_t k = 1; k < frags_.size(); ++k)
        if (frags_[k].second - frags_[k].first > frags_[skip].second - frags_[skip].first) skip = k;
    }
    for (std::size_t k = 0; k < frags_.size(); ++k) {
      std::uint32_t fs = frags_[k].first;
      if (k == skip || in_queue_[fs]) continue;
      in_queue_[fs] = 1;
      queue_.push_back(fs);
    }
    return h;
  }

  std::size_t n_;
  bool directed_;
  std::vector<std::vector<std::uint32_t>> out_, in_;
  std::vector<std::uint64_t> key_;
  std::vector<char> mark_, in_queue_;
  std::vector<std::uint32_t> queue_, members_, touched_, cells_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frags_;
};

std::vector<std::uint8_t> serialize(const Graph& g, std::span<const std::uint32_t> lab) {
  std::size_t n = lab.size();
  std::vector<std::uint8_t> out{std::uint8_t(n >> 24), std::uint8_t(n >> 16), std::uint8_t(n >> 8), std::uint8_t(n)};
  std::uint8_t acc = 0;
  int filled = 0;
  auto put = [&](bool bit) {
    acc = static_cast<std::uint8_t>((acc << 1) | (bit ? 1 : 0));
    if (++filled == 8) {
      out.push_back(acc);
      acc = 0;
      filled = 0;
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = g.directed ? 0 : i + 1; j < n; ++j) put(g.has_edge(lab[i], lab[j]));
  if (filled) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return out;
}

int compare_traces(std::span<const std::uint64_t> cur, std::span<const std::uint64_t> best) {
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (i >= best.size()) return 1;
    if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
  }
  return cur.size() < best.size() ? -1 : 0;
}

class Search {
 public:
  Search(const Graph& g, const CanonicalOptions& opt)
      : g_(g), n_(static_cast<std::uint32_t>(g.vertex_count())), opt_(opt), refiner_(g) {}

  CanonicalForm run(SearchStats* stats) {
    Partition root = Partition::from_coloring(Coloring::uniform(n_));
    auto starts = root.cell_starts();
    trace_.assign(1, refiner_.refine(root, starts));
    search(root, 0);
    if (stats) *stats = stats_;
    return CanonicalForm{best_bytes_, best_lab_};
  }

 private:
  struct Frame {
    std::uint32_t current = 0;
    std::vector<std::uint32_t> explored;
    std::vector<std::uint32_t> orbit;
    std::size_t gens_seen = 0;
  };

  static constexpr int kNoJump = -1;

  int search(Partition& p, std::size_t level) {
    if (++stats_.nodes > opt_.node_budget) {
      throw Error(ErrorCode::SearchBudgetExceeded, "more than " + std::to_string(opt_.node_budget) + " search nodes");
    }
    if (have_best_ && compare_traces(trace_, best_trace_) > 0) return kNoJump;
    if (p.discrete()) return leaf(p, level);

    // First largest non-singleton cell.
    std::uint32_t target = 0, best_size = 0;
    for (std::uint32_t s = 0; s < n_; s = p.end[s]) {
      if (p.end[s] - s > best_size) {
        best_size = p.end[s] - s;
        target = s;
      }
    }
    std::vector<std::uint32_t> candidates(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(candidates.begin(), candidates.end());

    if (frames_.size() <= level) frames_.resize(level + 1);
    reset_frame(level);

    for (std::uint32_t v : candidates) {
      if (in_explored_orbit(level, v)) continue;
      frames_[level].explored.push_back(v);
      frames_[level].current = v;

      Partition child = p;
      std::uint32_t single = child.individualize(v);
      trace_.resize(level + 1);
      trace_.push_back(refiner_.refine(child, std::span<const std::uint32_t>(&single, 1)));
      int jump = search(child, level + 1);
      trace_.resize(level + 1);
      if (jump != kNoJump && jump < static_cast<int>(level)) return jump;
    }
    return kNoJump;
  }

  void reset_frame(std::size_t level) {
    Frame& f = frames_[level];
    f.explored.clear();
    f.orbit.resize(n_);
    std::iota(f.orbit.begin(), f.orbit.end(), 0u);
    f.gens_seen = 0;
  }

  std::uint32_t find(std::vector<std::uint32_t>& uf, std::uint32_t x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }

  // Brings frame `level`'s orbits up to date with the automorphisms found so
  // far that fix the individualised vertices above it.
  void update_orbits(std::size_t level) {
    Frame& f = frames_[level];
    for (; f.gens_seen < automorphisms_.size(); ++f.gens_seen) {
      const auto& gamma = automorphisms_[f.gens_seen];
      bool fixes = true;
      for (std::size_t l = 0; l < level && fixes; ++l) fixes = gamma[frames_[l].current] == frames_[l].current;
      if (!fixes) continue;
      for (std::uint32_t v = 0; v < n_; ++v) {
        std::uint32_t a = find(f.orbit, v), b = find(f.orbit, gamma[v]);
        if (a != b) f.orbit[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  bool in_explored_orbit(std::size_t level, std::uint32_t v) {
    Frame& f = frames_[level];
    if (f.explored.empty()) return false;
    update_orbits(level);
    std::uint32_t r = find(f.orbit, v);
    for (auto e : f.explored)
      if (find(f.orbit, e) == r) return true;
    return false;
  }

  int leaf(const Partition& p, std::size_t level) {
    ++stats_.leaves;
    auto bytes = serialize(g_, p.lab);
    if (!have_best_) {
      have_best_ = true;
      best_trace_ = first_trace_ = trace_;
      best_bytes_ = first_bytes_ = std::move(bytes);
      best_lab_ = first_lab_ = p.lab;
      return kNoJump;
    }
    if (trace_ == first_trace_ && bytes == first_bytes_) return automorphism(first_lab_, p.lab, level);
    int cmp = compare_traces(trace_, best_trace_);
    if (cmp == 0) {
      if (bytes == best_bytes_) return automorphism(best_lab_, p.lab, level);
      if (bytes > best_bytes_) return kNoJump;
    }
    best_trace_ = trace_;
    best_bytes_ = std::move(bytes);
    best_lab_ = p.lab;
    return kNoJump;
  }

  // Records the automorphism mapping leaf `from` onto leaf `to` and returns
  // the shallowest level whose current branch is now known to be equivalent
  // to one already explored.
  int automorphism(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to,
                   std::size_t level) {
    std::vector<std::uint32_t> gamma(n_);
    for (std::uint32_t i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (std::uint32_t v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
    if (identity) return kNoJump;
    automorphisms_.push_back(std::move(gamma));
    ++stats_.automorphisms;
    for (std::size_t l = 0; l < level; ++l) {
      Frame& f = frames_[l];
      update_orbits(l);
      std::uint32_t r = find(f.orbit, f.current);
      for (std::size_t k = 0; k + 1 < f.explored.size(); ++k)
        if (find(f.orbit, f.explored[k]) == r) return static_cast<int>(l);
    }
    return kNoJump;
  }

  const Graph& g_;
  std::uint32_t n_;
  CanonicalOptions opt_;
  Refiner refiner_;
  SearchStats stats_;

  std::vector<std::uint64_t> trace_;
  std::vector<Frame> frames_;
  std::vector<std::vector<std::uint32_t>> automorphisms_;

  bool have_best_ = false;
  std::vector<std::uint64_t> best_trace_, first_trace_;
  std::vector<std::uint8_t> best_bytes_, first_bytes_;
  std::vector<std::uint32_t> best_lab_, first_lab_;
};

}  // namespace

Coloring color_refinement(const Graph& g, const Coloring& initial) {
  if (initial.color.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "coloring size does not match the graph");
  }
  // Renumber so that class ids are contiguous while keeping their order.
  std::vector<std::uint32_t> ids(initial.color.begin(), initial.color.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Coloring c{std::vector<std::uint32_t>(initial.color.size())};
  for (std::size_t v = 0; v < c.color.size(); ++v)
    c.color[v] = static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), initial.color[v]) - ids.begin());

  Partition p = Partition::from_coloring(c);
  Refiner r(g);
  auto starts = p.cell_starts();
  r.refine(p, starts);
  return p.to_coloring();
}

Coloring color_refinement(const PowerGraph& p, const Coloring& initial) {
  return color_refinement(p.graph(), initial);
}

CanonicalForm canonical_form(const Graph& g, const CanonicalOptions& options, SearchStats* stats) {
  if (g.vertex_count() == 0) return CanonicalForm{{0, 0, 0, 0}, {}};
  return Search(g, options).run(stats);
}

CanonicalForm canonical_form(const PowerGraph& p, const CanonicalOptions& options) {
  return canonical_form(p.graph(), options);
}

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& map) {
  std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || map.size() != n || a.directed != b.directed) return false;
  std::vector<char> hit(n, 0);
  for (auto v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (a.has_edge(u, v) != b.has_edge(map[u], map[v])) return false;
  return true;
}

std::optional<VertexMapping> isomorphism_from_forms(const Graph& a, const CanonicalForm& ca,
                                                    const Graph& b, const CanonicalForm& cb) {
  if (a.directed != b.directed || a.vertex_count() != b.vertex_count() || ca.bytes != cb.bytes) return std::nullopt;
  VertexMapping map(a.vertex_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[ca.labeling[i]] = cb.labeling[i];
  if (!is_isomorphism(a, b, map)) {
    throw Error(ErrorCode::Internal, "canonical forms agree but the induced bijection is not an isomorphism");
  }
  return map;
}

std::optional<VertexMapping> are_isomorphic_graphs(const Graph& a, const Graph& b, const CanonicalOptions& options) {
  if (a.directed != b.directed || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  return isomorphism_from_forms(a, canonical_form(a, options), b, canonical_form(b, options));
}

std::optional<VertexMapping> are_isomorphic_graphs(const PowerGraph& a, const PowerGraph& b,
                                                   const CanonicalOptions& options) {
  return are_isomorphic_graphs(a.graph(), b.graph(), options);
}

}  // namespace pg
