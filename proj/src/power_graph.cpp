#include "pg/power_graph.hpp"

#include <algorithm>
#include <sstream>

#include "pg/error.hpp"

namespace pg {

PowerGraph power_graph(const Group& g, bool directed) {
  std::size_t n = g.order();
  PowerGraph p{Graph{true, BitMatrix(n)}, Graph{false, BitMatrix(n)}, directed,
               std::vector<std::uint32_t>(g.element_orders().begin(), g.element_orders().end())};
  for (Element a = 1; a < n; ++a) {
    for (Element b = g.mul(a, a);; b = g.mul(b, a)) {
      if (b != a) {
        p.arcs.adj.set(a, b);
        p.undirected.adj.set(a, b);
        p.undirected.adj.set(b, a);
      }
      if (b == 0) break;
    }
  }
  return p;
}

std::size_t square_root_count(const Group& g, Element x) {
  std::size_t c = 0;
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(y, y) == x) ++c;
  return c;
}

RootProfile root_profile(const Group& g, unsigned k) {
  RootProfile prof(g.order());
  for (Element y = 0; y < g.order(); ++y) ++prof[power(g, y, k)][g.element_order(y)];
  return prof;
}

std::vector<std::pair<std::uint32_t, std::size_t>> square_root_signature(const Group& g) {
  std::vector<std::size_t> roots(g.order(), 0);
  for (Element y = 0; y < g.order(); ++y) ++roots[g.mul(y, y)];
  std::vector<std::pair<std::uint32_t, std::size_t>> sig;
  for (Element x = 0; x < g.order(); ++x) sig.emplace_back(g.element_order(x), roots[x]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<Element> root_power_set(const Group& g, Element x, unsigned k, std::uint32_t root_order, unsigned m) {
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y)
    if (g.element_order(y) == root_order && power(g, y, k) == x) out.push_back(power(g, y, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PowerGraph product_adjacency_2group(const Group& g, const Group& a) {
  auto power_of_two = [](std::size_t n) { return n != 0 && (n & (n - 1)) == 0; };
  if (!power_of_two(g.order())) throw Error(ErrorCode::NotTwoGroup, "order " + std::to_string(g.order()));
  for (std::uint32_t o : a.element_orders())
    if (o > 2) throw Error(ErrorCode::NotElementaryAbelianTwoGroup, "element of order " + std::to_string(o));

  std::size_t ng = g.order(), na = a.order(), n = ng * na;
  // odd[a] / even[a]: elements a^k with k odd / k even and positive.
  std::vector<std::vector<char>> odd(ng, std::vector<char>(ng, 0)), even = odd;
  for (Element x = 0; x < ng; ++x) {
    Element p = 0;
    for (std::uint32_t k = 1; k <= 2 * g.element_order(x); ++k) {
      p = g.mul(p, x);
      (k % 2 ? odd : even)[x][p] = 1;
    }
  }

  PowerGraph pg{Graph{true, BitMatrix(n)}, Graph{false, BitMatrix(n)}, false, std::vector<std::uint32_t>(n)};
  for (std::size_t u = 0; u < n; ++u) {
    Element ga = static_cast<Element>(u / na), x = static_cast<Element>(u % na);
    pg.element_orders[u] = std::max<std::uint32_t>(g.element_order(ga), a.element_order(x));
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      Element gb = static_cast<Element>(v / na), y = static_cast<Element>(v % na);
      bool arc = false;
      if (x == 0 && y == 0) arc = odd[ga][gb] || even[ga][gb];
      else if (x == y) arc = odd[ga][gb];
      else if (y == 0) arc = even[ga][gb];
      if (arc) {
        pg.arcs.adj.set(u, v);
        pg.undirected.adj.set(u, v);
        pg.undirected.adj.set(v, u);
      }
    }
  }
  return pg;
}

bool is_complete(const Graph& g) {
  std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v) && !g.has_edge(v, u)) return false;
  return true;
}

bool is_connected(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && (g.has_edge(u, v) || g.has_edge(v, u))) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

bool is_complete(const PowerGraph& p) { return is_complete(p.undirected); }
bool is_connected(const PowerGraph& p) { return is_connected(p.undirected); }

std::size_t count_triangles(const Graph& g, std::span<const std::uint32_t> vs) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k])) ++c;
    }
  return c;
}

std::string edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const PowerGraph& p, const std::string& name) {
  const Graph& g = p.graph();
  std::ostringstream out;
  out << (g.directed ? "digraph " : "graph ") << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << p.element_orders[v] << "\"];\n";
  const char* op = g.directed ? " -> " : " -- ";
  for (auto [u, v] : g.edges()) out << "  " << u << op << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pg
