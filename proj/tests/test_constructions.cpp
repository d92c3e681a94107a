#include <doctest.h>

#include "oracles.hpp"
#include "pg/constructions.hpp"
#include "pg/expression.hpp"
#include "pg/io.hpp"
#include "pg/isomorphism.hpp"
#include "pg/named_groups.hpp"
#include "pg/power_graph.hpp"
#include "test_util.hpp"

using namespace pg;

TEST_CASE("cyclic groups") {
  CHECK(cyclic(1).order() == 1);
  CHECK(to_string(order_spectrum(cyclic(5))) == "{1:1, 5:4}");
  auto c = cyclic(9);
  for (Element i = 0; i < 9; ++i)
    for (Element j = 0; j < 9; ++j) CHECK(c.mul(i, j) == (i + j) % 9);
}

TEST_CASE("abelian groups") {
  auto c44 = abelian({4, 4});
  for (Element x = 1; x < 16; ++x)
    if (c44.element_order(x) == 2) CHECK(square_root_count(c44, x) == 4);
  CHECK(to_string(order_spectrum(abelian({2, 2}))) == "{1:1, 2:3}");
  CHECK(to_string(order_spectrum(abelian({3, 3, 3}))) == "{1:1, 3:26}");
  CHECK(abelian({}).order() == 1);
  CHECK(elementary_abelian(2, 3) == abelian({2, 2, 2}));
  CHECK(are_isomorphic_groups(abelian({2, 3}), cyclic(6)));
  CHECK(are_isomorphic_groups(abelian({4, 2}), abelian({2, 4})));
}

TEST_CASE("dihedral groups") {
  CHECK(to_string(order_spectrum(dihedral(8))) == "{1:1, 2:5, 4:2}");
  CHECK(are_isomorphic_groups(dihedral(2), cyclic(2)));
  CHECK(error_code([] { dihedral(7); }) == ErrorCode::OddOrder);
  CHECK(are_isomorphic_groups(dihedral(6), parse_perm("3\n1 0 2\n1 2 0\n")));
}

TEST_CASE("property: dihedral structure") {
  for (std::size_t m = 1; m <= 20; ++m) {
    auto d = dihedral(2 * m);
    std::size_t reflections = 0;
    for (Element x = static_cast<Element>(m); x < 2 * m; ++x) reflections += d.element_order(x) == 2;
    CHECK(reflections == m);
    std::vector<Element> rot(m);
    for (Element i = 0; i < m; ++i) rot[i] = i;
    CHECK(is_subgroup(d, rot));
    CHECK((m == 1 || d.element_order(1) == m));
  }
}

TEST_CASE("generalised quaternion groups") {
  auto q8 = generalized_quaternion(8);
  CHECK(order_spectrum(q8).count(4) == 6);
  for (std::size_t order : {8u, 16u, 32u, 64u}) {
    auto q = generalized_quaternion(order);
    CHECK(order_spectrum(q).count(2) == 1);
    CHECK_FALSE(is_abelian(q));
  }
  CHECK(error_code([] { generalized_quaternion(12); }) == ErrorCode::NotQuaternionOrder);
  CHECK(error_code([] { generalized_quaternion(4); }) == ErrorCode::NotQuaternionOrder);
  auto c2q8 = direct_product(cyclic(2), q8);
  std::vector<std::size_t> roots;
  for (Element x = 1; x < 16; ++x)
    if (c2q8.element_order(x) == 2) roots.push_back(square_root_count(c2q8, x));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::size_t>{0, 0, 12});
  // The Q8 involution paired with the identity of C2.
  Element z = 0;
  for (Element x = 1; x < 8; ++x)
    if (q8.element_order(x) == 2) z = x;
  CHECK(square_root_count(c2q8, z) == 12);
}

TEST_CASE("Q8 is determined by its power graph among groups of order 8") {
  auto q = canonical_form(power_graph(generalized_quaternion(8)));
  for (const char* s : {"cyclic:8", "abelian:2x4", "abelian:2x2x2", "dihedral:8"})
    CHECK(canonical_form(power_graph(parse_construction(s))) != q);
}

TEST_CASE("Heisenberg group") {
  auto h = heisenberg(3);
  CHECK(h.order() == 27);
  CHECK(to_string(order_spectrum(h)) == "{1:1, 3:26}");
  CHECK_FALSE(is_abelian(h));
  CHECK_FALSE(are_isomorphic_groups(h, abelian({3, 3, 3})));
  CHECK(center(h).order() == 3);
  auto h5 = heisenberg(5);
  CHECK(to_string(order_spectrum(h5)) == "{1:1, 5:124}");
  CHECK(error_code([] { heisenberg(2); }).has_value());
  CHECK(error_code([] { heisenberg(9); }).has_value());
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic(3), c2 = cyclic(2);
  Permutation inv{0, 2, 1};
  Element gen = 1;
  auto act = AutomorphismAction::from_generators(c2, c3, std::span<const Element>(&gen, 1),
                                                 std::span<const Permutation>(&inv, 1));
  CHECK(are_isomorphic_groups(semidirect_product(act), dihedral(6)));

  auto a = abelian({3, 3});
  auto gd = generalized_dihedral(a);
  CHECK(to_string(order_spectrum(gd)) == "{1:1, 2:9, 3:8}");

  auto triv = AutomorphismAction::trivial(dihedral(6), cyclic(4));
  CHECK(semidirect_product(triv) == direct_product(cyclic(4), dihedral(6)));
}

TEST_CASE("property: trivial action gives the direct product element for element") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 15; ++i) {
    auto h = oracle::random_small_group(rng), n = oracle::random_small_group(rng);
    if (h.order() * n.order() > 400) continue;
    CHECK(semidirect_product(AutomorphismAction::trivial(h, n)) == direct_product(n, h));
  }
}

TEST_CASE("invalid actions") {
  auto c3 = cyclic(3), c2 = cyclic(2);
  Element gen = 1;
  Permutation bad{0, 1, 1};
  CHECK(error_code([&] {
          AutomorphismAction::from_generators(c2, c3, std::span<const Element>(&gen, 1),
                                              std::span<const Permutation>(&bad, 1));
        }) == ErrorCode::InvalidAction);
  // Not an automorphism: swaps 0 and 1.
  Permutation moves_identity{1, 0, 2};
  CHECK(error_code([&] {
          AutomorphismAction::from_generators(c2, c3, std::span<const Element>(&gen, 1),
                                              std::span<const Permutation>(&moves_identity, 1));
        }) == ErrorCode::InvalidAction);
  // C3 acting on C3 by inversion is not a homomorphism C3 -> Aut(C3).
  Permutation inv{0, 2, 1};
  CHECK(error_code([&] {
          AutomorphismAction::from_generators(c3, c3, std::span<const Element>(&gen, 1),
                                              std::span<const Permutation>(&inv, 1));
        }) == ErrorCode::InvalidAction);
}

TEST_CASE("D8 central product C4") {
  auto g = named::d8_central_c4();
  CHECK(g.order() == 16);
  CHECK_FALSE(are_isomorphic_groups(g, abelian({2, 2, 4})));
  CHECK(are_conformal(g, abelian({2, 2, 4})));
  CHECK(center(g).order() == 4);
}

TEST_CASE("construction expressions") {
  CHECK(parse_construction("cyclic:6") == cyclic(6));
  CHECK(parse_construction("abelian:4x4") == abelian({4, 4}));
  CHECK(parse_construction("dihedral:8") == dihedral(8));
  CHECK(parse_construction("quaternion:8") == generalized_quaternion(8));
  CHECK(parse_construction("heisenberg:3") == heisenberg(3));
  CHECK(parse_construction("elementary:2^3") == abelian({2, 2, 2}));
  CHECK(parse_construction("product:(cyclic:2,quaternion:8)") == direct_product(cyclic(2), generalized_quaternion(8)));
  CHECK(parse_construction("product:(cyclic:2,product:(dihedral:6,cyclic:3))").order() == 36);
  CHECK(parse_construction("product:(cyclic:2,cyclic:3,cyclic:5)").order() == 30);
  for (const char* bad : {"cyclic:", "cyclic:x", "abelian:4x", "product:(cyclic:2", "nonsense:3", "named:foo"})
    CHECK(error_code([&] { parse_construction(bad); }) == ErrorCode::ParseError);
  CHECK(error_code([] { parse_construction("product:(cyclic:64,cyclic:64)", 1000); }) ==
        ErrorCode::ProductTooLarge);
}
