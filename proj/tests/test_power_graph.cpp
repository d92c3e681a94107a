#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "pg/constructions.hpp"
#include "pg/expression.hpp"
#include "pg/isomorphism.hpp"
#include "pg/named_groups.hpp"
#include "pg/power_graph.hpp"
#include "test_util.hpp"

using namespace pg;

namespace {

bool prime_power(std::size_t n) { return n == 1 || factorize(n).size() == 1; }

std::vector<Group> two_groups_up_to_16() {
  std::vector<Group> out;
  for (const char* s : {"cyclic:1", "cyclic:2", "cyclic:4", "abelian:2x2", "cyclic:8", "abelian:2x4", "abelian:2x2x2",
                        "dihedral:8", "quaternion:8", "cyclic:16", "abelian:2x8", "abelian:4x4", "abelian:2x2x4",
                        "abelian:2x2x2x2", "dihedral:16", "quaternion:16", "product:(cyclic:2,quaternion:8)",
                        "product:(dihedral:8,cyclic:2)", "named:d8c4", "gdihedral:2x4"})
    out.push_back(parse_construction(s));
  return out;
}

}  // namespace

TEST_CASE("examples") {
  auto c5 = power_graph(cyclic(5));
  CHECK(is_complete(c5));
  CHECK(c5.undirected.edge_count() == 10);
  CHECK_FALSE(is_complete(power_graph(cyclic(6))));
  auto s3 = power_graph(dihedral(6));
  auto e = s3.undirected.edges();
  CHECK(e == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}});
  CHECK(is_complete(power_graph(cyclic(9))));
  CHECK_FALSE(is_complete(power_graph(abelian({2, 2}))));
  CHECK(is_complete(power_graph(cyclic(1))));
}

TEST_CASE("directed arcs") {
  auto p = power_graph(cyclic(4), true);
  CHECK(p.directed);
  CHECK(p.arcs.has_edge(1, 2));
  CHECK_FALSE(p.arcs.has_edge(2, 1));
  CHECK(p.arcs.has_edge(1, 3));
  CHECK(p.arcs.has_edge(3, 1));
  CHECK(p.graph().directed);
  CHECK_FALSE(power_graph(cyclic(4)).graph().directed);
}

TEST_CASE("property: orbit construction equals the pairwise oracle") {
  for (const auto& src : oracle::small_group_sources()) {
    Group g = parse_construction(src);
    if (g.order() > 64) continue;
    CAPTURE(src);
    auto p = power_graph(g, true);
    CHECK(p.arcs == oracle::naive_power_graph(g, true));
    CHECK(p.undirected == oracle::naive_power_graph(g, false));
  }
}

TEST_CASE("property: structural invariants") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    Group g = oracle::random_small_group(rng);
    auto p = power_graph(g, true);
    std::size_t n = g.order();
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      ok = !p.undirected.has_edge(u, u) && !p.arcs.has_edge(u, u);
      for (std::size_t v = 0; v < n && ok; ++v)
        ok = p.undirected.has_edge(u, v) == (p.arcs.has_edge(u, v) || p.arcs.has_edge(v, u));
      if (u) ok = ok && p.undirected.has_edge(0, u) && p.arcs.has_edge(u, 0);
    }
    CHECK(ok);
    CHECK(is_connected(p));
    CHECK(is_complete(p) == (is_cyclic(g) && prime_power(n)));
  }
}

TEST_CASE("square roots") {
  auto c44 = abelian({4, 4});
  for (Element x = 1; x < 16; ++x)
    if (c44.element_order(x) == 2) CHECK(square_root_count(c44, x) == 4);
  auto c2q8 = direct_product(cyclic(2), generalized_quaternion(8));
  std::vector<std::size_t> r;
  for (Element x = 1; x < 16; ++x)
    if (c2q8.element_order(x) == 2) r.push_back(square_root_count(c2q8, x));
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<std::size_t>{0, 0, 12});

  auto g = dihedral(10);
  auto prof = root_profile(g, 2);
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t total = 0;
    for (auto [o, c] : prof[x]) total += c;
    CHECK(total == square_root_count(g, x));
  }
}

TEST_CASE("root power sets in the order-72 groups") {
  auto g = named::order72_first().group;
  for (Element x = 1; x < 72; ++x) {
    if (g.element_order(x) != 3) continue;
    auto cubes = root_power_set(g, x, 2, 6, 3);
    CHECK(cubes.size() == 3);
    for (Element c : cubes) CHECK(g.element_order(c) == 2);
  }
}

TEST_CASE("property: isomorphic power graphs have equal square-root signatures") {
  std::vector<Group> gs;
  for (const auto& src : oracle::small_group_sources()) gs.push_back(parse_construction(src));
  gs.push_back(direct_product(abelian({3, 3, 3}), cyclic(2)));
  gs.push_back(direct_product(heisenberg(3), cyclic(2)));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i].order() != gs[j].order()) continue;
      if (!are_isomorphic_graphs(power_graph(gs[i]), power_graph(gs[j]))) continue;
      ++pairs;
      CHECK(square_root_signature(gs[i]) == square_root_signature(gs[j]));
    }
  CHECK(pairs >= 3);
}

TEST_SUITE("product adjacency") {
  TEST_CASE("D8 x C2 cases") {
    auto d8 = dihedral(8), c2 = cyclic(2);
    auto p = product_adjacency_2group(d8, c2);
    // (a, x) is encoded as a * 2 + x; r = 1 has order 4, t = 1.
    CHECK(p.undirected.has_edge(1 * 2 + 1, 3 * 2 + 1));
    CHECK(p.undirected.has_edge(1 * 2 + 1, 2 * 2 + 0));
    CHECK_FALSE(p.undirected.has_edge(1 * 2 + 1, 2 * 2 + 1));
    CHECK(p.undirected == power_graph(direct_product(d8, c2)).undirected);
  }

  TEST_CASE("property: equals the direct construction for small 2-groups") {
    auto c2 = cyclic(2), k4 = abelian({2, 2});
    for (const auto& g : two_groups_up_to_16()) {
      for (const Group* a : {&c2, &k4}) {
        auto rule = product_adjacency_2group(g, *a);
        auto direct = power_graph(direct_product(g, *a));
        CHECK(rule.undirected == direct.undirected);
        CHECK(rule.element_orders == direct.element_orders);
      }
    }
  }

  TEST_CASE("preconditions") {
    CHECK(error_code([] { product_adjacency_2group(cyclic(6), cyclic(2)); }) == ErrorCode::NotTwoGroup);
    CHECK(error_code([] { product_adjacency_2group(cyclic(4), cyclic(4)); }) ==
          ErrorCode::NotElementaryAbelianTwoGroup);
  }
}

TEST_CASE("order-16 triangle diagnostic") {
  for (const Group& g : {abelian({2, 2, 4}), named::d8_central_c4()}) {
    auto p = power_graph(g);
    std::vector<std::uint32_t> vs;
    Element rooted = 0;
    for (Element x = 1; x < 16; ++x) {
      if (g.element_order(x) == 4) vs.push_back(x);
      if (g.element_order(x) == 2 && square_root_count(g, x) > 0) {
        CHECK(rooted == 0);
        rooted = x;
      }
    }
    REQUIRE(rooted != 0);
    vs.push_back(rooted);
    CHECK(vs.size() == 9);
    CHECK(count_triangles(p.undirected, vs) == 4);
  }
}

TEST_CASE("exports") {
  auto p = power_graph(cyclic(5));
  auto el = edge_list(p.graph());
  CHECK(std::count(el.begin(), el.end(), '\n') == 10);
  CHECK(el.substr(0, 4) == "0 1\n");
  auto dot = to_dot(p);
  CHECK(dot.find("graph P {") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 5 + 10 + 1);
  CHECK(dot.find("1 [label=\"5\"]") != std::string::npos);
  auto dd = to_dot(power_graph(cyclic(3), true), "D");
  CHECK(dd.find("digraph D {") == 0);
  CHECK(dd.find("1 -> 2") != std::string::npos);
}
