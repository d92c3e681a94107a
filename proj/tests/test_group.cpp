#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "pg/constructions.hpp"
#include "pg/io.hpp"
#include "pg/isomorphism.hpp"
#include "pg/named_groups.hpp"
#include "test_util.hpp"

using namespace pg;

namespace {

Group c3() { return validate_group(std::vector<std::vector<Element>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

std::size_t lcm(std::size_t a, std::size_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

TEST_SUITE("validate_group") {
  TEST_CASE("trivial and C3 tables are groups") {
    auto t = validate_group(std::vector<std::vector<Element>>{{0}});
    CHECK(t.order() == 1);
    CHECK(c3().order() == 3);
    CHECK(c3().inverse(1) == 2);
  }

  TEST_CASE("mutated C3 row is rejected") {
    std::vector<std::vector<Element>> rows{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
    auto code = error_code([&] { validate_group(rows); });
    REQUIRE(code);
    CHECK((*code == ErrorCode::NotLatinSquare || *code == ErrorCode::NotAssociative));
  }

  TEST_CASE("identity must be index 0") {
    std::vector<std::vector<Element>> rows{{1, 0}, {0, 1}};
    CHECK(error_code([&] { validate_group(rows); }) == ErrorCode::IdentityNotZero);
  }

  TEST_CASE("non-associative loop of order 5") {
    std::vector<std::vector<Element>> rows{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK(error_code([&] { validate_group(rows); }) == ErrorCode::NotAssociative);
  }

  TEST_CASE("ragged and out-of-range tables") {
    CHECK(error_code([] { validate_group(std::vector<std::vector<Element>>{{0, 1}, {1}}); }).has_value());
    CHECK(error_code([] { validate_group(std::vector<std::vector<Element>>{{0, 1}, {1, 2}}); }).has_value());
  }

  TEST_CASE("every constructed group satisfies the table invariants") {
    for (const auto& src : oracle::small_group_sources()) {
      CAPTURE(src);
      Group g = parse_construction(src);
      std::size_t n = g.order();
      bool ok = true;
      for (Element i = 0; i < n && ok; ++i) {
        ok = g.mul(0, i) == i && g.mul(i, 0) == i && g.mul(i, g.inverse(i)) == 0 && g.mul(g.inverse(i), i) == 0;
        for (Element j = 0; j < n && ok; ++j)
          for (Element k = 0; k < n && ok; ++k) ok = g.mul(g.mul(i, j), k) == g.mul(i, g.mul(j, k));
      }
      CHECK(ok);
      CHECK_FALSE(g.lightly_validated());
    }
  }

  TEST_CASE("large tables are validated on generators only") {
    auto g = cyclic(600);
    CHECK(g.lightly_validated());
    CHECK(g.element_order(1) == 600);
  }
}

TEST_SUITE("orders and spectra") {
  TEST_CASE("element orders") {
    auto c6 = cyclic(6);
    CHECK(element_order(c6, 1) == 6);
    CHECK(element_order(c6, 0) == 1);
    auto q8 = generalized_quaternion(8);
    std::size_t four = 0;
    for (Element x = 0; x < 8; ++x) four += q8.element_order(x) == 4;
    CHECK(four == 6);
  }

  TEST_CASE("powers") {
    auto c4 = cyclic(4);
    CHECK(power(c4, 1, 2) == 2);
    auto c5 = cyclic(5);
    CHECK(power(c5, 1, 7) == 2);
    CHECK(power(c5, 3, 0) == 0);
    auto d = dihedral(12);
    for (Element x = 0; x < d.order(); ++x) CHECK(power(d, x, d.element_order(x)) == 0);
  }

  TEST_CASE("spectra of small groups") {
    CHECK(to_string(order_spectrum(dihedral(8))) == "{1:1, 2:5, 4:2}");
    CHECK(to_string(order_spectrum(generalized_quaternion(8))) == "{1:1, 2:1, 4:6}");
    CHECK(to_string(order_spectrum(cyclic(7))) == "{1:1, 7:6}");
    CHECK(order_spectrum(direct_product(abelian({3, 3}), cyclic(3))) == order_spectrum(heisenberg(3)));
    CHECK(to_string(order_spectrum(heisenberg(3))) == "{1:1, 3:26}");
  }

  TEST_CASE("property: spectrum agrees with naive orders and Lagrange") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
      Group g = oracle::random_small_group(rng);
      auto s = order_spectrum(g);
      CHECK(oracle::as_map(s) == oracle::naive_spectrum(g));
      CHECK(s.total() == g.order());
      CHECK(s.count(1) == 1);
      for (auto [o, c] : s.entries) CHECK(g.order() % o == 0);
      for (Element x = 0; x < g.order(); ++x) CHECK(g.element_order(x) == oracle::naive_order(g, x));
    }
  }

  TEST_CASE("conformality") {
    CHECK(are_conformal(abelian({4, 4}), direct_product(cyclic(2), generalized_quaternion(8))));
    CHECK_FALSE(are_conformal(cyclic(4), abelian({2, 2})));
    auto d = dihedral(10);
    CHECK(are_conformal(d, d));
    CHECK_FALSE(are_conformal(cyclic(4), cyclic(5)));
  }
}

TEST_SUITE("direct products") {
  TEST_CASE("examples") {
    CHECK(are_isomorphic_groups(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
    CHECK(direct_product(dihedral(8), cyclic(2)).order() == 16);
    CHECK(error_code([] { direct_product(cyclic(64), cyclic(64), 1000); }) == ErrorCode::ProductTooLarge);
  }

  TEST_CASE("encoding and element orders") {
    auto g = dihedral(6), h = cyclic(4);
    auto p = direct_product(g, h);
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < h.order(); ++b) {
        Element x = a * 4 + b;
        CHECK(p.element_order(x) == lcm(g.element_order(a), h.element_order(b)));
        CHECK(p.mul(x, x) == g.mul(a, a) * 4 + h.mul(b, b));
      }
  }

  TEST_CASE("property: spectra compose by lcm") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 25; ++i) {
      Group g = oracle::random_small_group(rng), h = oracle::random_small_group(rng);
      if (g.order() * h.order() > 512) continue;
      std::map<std::uint32_t, std::size_t> expected;
      for (auto [a, ca] : order_spectrum(g).entries)
        for (auto [b, cb] : order_spectrum(h).entries) expected[static_cast<std::uint32_t>(lcm(a, b))] += ca * cb;
      CHECK(oracle::as_map(order_spectrum(direct_product(g, h))) == expected);
    }
  }
}

TEST_SUITE("structure") {
  TEST_CASE("centre, commutators, classes") {
    CHECK(center(heisenberg(3)).order() == 3);
    CHECK(center(dihedral(8)).order() == 2);
    CHECK(center(dihedral(6)).order() == 1);
    auto q = generalized_quaternion(8);
    auto sizes = conjugacy_class_sizes(q);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
    CHECK(is_abelian(abelian({2, 4})));
    CHECK_FALSE(is_abelian(dihedral(8)));
    CHECK(is_cyclic(direct_product(cyclic(3), cyclic(4))));
    CHECK_FALSE(is_cyclic(abelian({2, 2})));
    auto d = dihedral(8);
    for (Element a = 0; a < 8; ++a)
      for (Element b = 0; b < 8; ++b) CHECK(commutator(d, a, b) == d.mul(d.mul(d.inverse(a), d.inverse(b)), d.mul(a, b)));
  }

  TEST_CASE("nilpotency examples") {
    CHECK(is_nilpotent(dihedral(8)));
    CHECK(is_nilpotent(generalized_quaternion(16)));
    CHECK_FALSE(is_nilpotent(dihedral(6)));
    CHECK_FALSE(is_nilpotent(named::order72_first().group));
    CHECK_FALSE(is_nilpotent(named::order72_second().group));
    CHECK(is_nilpotent(direct_product(dihedral(8), cyclic(3))));
    CHECK(upper_central_series(abelian({2, 3})).back().order() == 6);
  }

  TEST_CASE("property: central series and Sylow criterion agree") {
    for (const auto& src : oracle::small_group_sources()) {
      CAPTURE(src);
      Group g = parse_construction(src);
      CHECK(is_nilpotent(g) == is_nilpotent_by_sylow(g));
    }
    for (const auto& g : {named::order72_first().group, named::order72_second().group})
      CHECK(is_nilpotent(g) == is_nilpotent_by_sylow(g));
  }

  TEST_CASE("derived series") {
    auto a = derived_series(abelian({2, 4}));
    CHECK(a.size() == 2);
    CHECK(a.back().order() == 1);
    auto d18 = derived_series(dihedral(18));
    REQUIRE(d18.size() >= 2);
    CHECK(d18[1].order() == 9);
    CHECK(is_solvable(dihedral(18)));
    CHECK(is_solvable(named::order72_first().group));
    CHECK(is_solvable(named::order72_second().group));
  }

  TEST_CASE("normal Hall subgroups") {
    auto g = named::order72_first().group;
    auto h = normal_hall_subgroup(g, 9);
    REQUIRE(h);
    CHECK(h->order() == 9);
    for (Element x : h->members) CHECK((x == 0 || g.element_order(x) == 3));
    auto s3 = dihedral(6);
    auto r = normal_hall_subgroup(s3, 3);
    REQUIRE(r);
    CHECK(r->members == std::vector<Element>{0, 1, 2});
    CHECK(normal_hall_subgroup(s3, 6)->order() == 6);
    CHECK_FALSE(normal_hall_subgroup(s3, 2));
    CHECK(error_code([&] { normal_hall_subgroup(dihedral(8), 2); }) == ErrorCode::NotHallDivisor);
  }

  TEST_CASE("property: Hall subgroups are closed under conjugation") {
    for (const auto& src : oracle::small_group_sources()) {
      Group g = parse_construction(src);
      std::size_t n = g.order();
      for (std::size_t m = 1; m <= n; ++m) {
        if (n % m || std::gcd(m, n / m) != 1) continue;
        auto h = normal_hall_subgroup(g, m);
        if (!h) continue;
        CAPTURE(src);
        CAPTURE(m);
        for (Element x = 0; x < n; ++x)
          for (Element y : h->members) CHECK(h->contains(g.mul(g.mul(g.inverse(x), y), x)));
      }
    }
  }
}

TEST_SUITE("group isomorphism") {
  TEST_CASE("examples") {
    CHECK(are_isomorphic_groups(cyclic(6), direct_product(cyclic(2), cyclic(3))));
    CHECK_FALSE(are_isomorphic_groups(dihedral(8), generalized_quaternion(8)));
    CHECK_FALSE(are_isomorphic_groups(cyclic(8), abelian({4, 2})));
    CHECK_FALSE(are_isomorphic_groups(named::order72_first().group, named::order72_second().group));
  }

  TEST_CASE("property: relabelled copies are isomorphic with a verified map") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
      Group g = oracle::random_small_group(rng);
      Group h = oracle::relabel_group(g, oracle::random_identity_fixing(rng, g.order()));
      auto phi = are_isomorphic_groups(g, h);
      REQUIRE(phi);
      for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) CHECK((*phi)[g.mul(a, b)] == h.mul((*phi)[a], (*phi)[b]));
      CHECK(are_conformal(g, h));
    }
  }

  TEST_CASE("property: agrees with brute force on orders <= 8") {
    std::vector<Group> gs;
    for (const char* s : {"cyclic:4", "abelian:2x2", "cyclic:6", "dihedral:6", "cyclic:8", "abelian:2x4",
                          "abelian:2x2x2", "dihedral:8", "quaternion:8"})
      gs.push_back(parse_construction(s));
    std::mt19937_64 rng(14);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = 0; j < gs.size(); ++j) {
        if (gs[i].order() != gs[j].order()) continue;
        Group h = oracle::relabel_group(gs[j], oracle::random_identity_fixing(rng, gs[j].order()));
        bool fast = are_isomorphic_groups(gs[i], h).has_value();
        CHECK(fast == oracle::brute_group_isomorphic(gs[i], h));
        CHECK(fast == (i == j));
      }
  }
}

TEST_SUITE("file formats") {
  TEST_CASE("cayley round trip") {
    auto g = dihedral(8);
    auto h = parse_cayley(format_cayley(g));
    CHECK(h == g);
  }

  TEST_CASE("cayley parsing is strict") {
    CHECK(error_code([] { parse_cayley("2\n0 1\n1\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_cayley("2\n0 1\n1 2\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_cayley("3\n0 1 2\n1 2 0\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_cayley("2\n1 0\n0 1\n"); }) == ErrorCode::IdentityNotZero);
  }

  TEST_CASE("permutation input") {
    auto s3 = parse_perm("3\n1 0 2\n1 2 0\n");
    CHECK(s3.order() == 6);
    CHECK(are_isomorphic_groups(s3, dihedral(6)));
    CHECK(parse_perm("4\n").order() == 1);
    CHECK(error_code([] { parse_perm("3\n0 0 1\n"); }).has_value());
  }
}
