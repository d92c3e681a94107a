#include <doctest.h>

#include <json.hpp>

#include "pg/constructions.hpp"
#include "pg/isomorphism.hpp"
#include "pg/power_graph.hpp"
#include "pg/scanner.hpp"
#include "test_util.hpp"

using namespace pg;

namespace {

const std::filesystem::path kData = PG_TEST_DATA;

const PairResult* find_pair(const OrderReport& r, const std::string& a, const std::string& b) {
  for (const auto& p : r.pairs)
    if ((p.a == a && p.b == b) || (p.a == b && p.b == a)) return &p;
  return nullptr;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("order-8 manifest") {
    auto c = load_catalog(kData / "order8.manifest");
    CHECK(c.entries.size() == 5);
    CHECK(c.errors.empty());
    CHECK(c.is_complete(8));
    CHECK_FALSE(c.is_complete(16));
    for (const auto& e : c.entries) CHECK(e.order == 8);
  }

  TEST_CASE("empty manifest") {
    auto c = parse_manifest("# nothing\n\n");
    CHECK(c.entries.empty());
    CHECK(c.errors.empty());
  }

  TEST_CASE("file sources and per-entry errors") {
    auto c = load_catalog(kData / "mixed.manifest");
    CHECK(c.entries.size() == 4);
    REQUIRE(c.errors.size() == 1);
    CHECK(c.errors[0].id == "lost");
    auto six = c.of_order(6);
    CHECK(six.size() == 4);
    auto r = classify_order(c, 6);
    CHECK(r.in_S);
    CHECK(r.corpus_complete);
    auto p = find_pair(r, "s3_perm", "s3_fp");
    REQUIRE(p);
    CHECK(p->group_isomorphic);
    CHECK_FALSE(find_pair(r, "c6", "d6")->conformal);
  }

  TEST_CASE("manifest syntax errors are fatal") {
    CHECK(error_code([] { parse_manifest("a cyclic:2\na cyclic:3\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_manifest("a b c\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_manifest("@complete x\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { parse_manifest("@frobnicate 3\n"); }) == ErrorCode::ParseError);
    CHECK(error_code([] { load_catalog(kData / "no-such.manifest"); }) == ErrorCode::IoError);
  }

  TEST_CASE("bad construction is an entry error") {
    auto c = parse_manifest("x cyclic:zz\ny cyclic:3\n");
    CHECK(c.entries.size() == 1);
    CHECK(c.errors.size() == 1);
  }

  TEST_CASE("builtin corpus") {
    auto c = builtin_corpus();
    CHECK(c.errors.empty());
    CHECK(c.of_order(8).size() == 5);
    CHECK(c.of_order(18).size() == 5);
    CHECK(c.of_order(72).size() == 2);
    CHECK(c.of_order(54).size() == 2);
    std::set<std::string> ids;
    for (const auto& e : c.entries) CHECK(ids.insert(e.id).second);
  }
}

TEST_SUITE("classify_order") {
  TEST_CASE("order 8") {
    auto r = classify_order(load_catalog(kData / "order8.manifest"), 8);
    CHECK(r.in_S);
    CHECK(r.in_Sbar);
    CHECK(r.corpus_complete);
    CHECK(r.pairs.size() == 10);
    CHECK(r.defects.empty());
  }

  TEST_CASE("order 16 witness") {
    auto c = parse_manifest("a abelian:2x2x4\nb named:d8c4\nc abelian:4x4\n");
    auto r = classify_order(c, 16);
    CHECK_FALSE(r.in_Sbar);
    REQUIRE(r.Sbar_witnesses.size() == 1);
    CHECK(r.Sbar_witnesses[0] == std::make_pair(std::string("a"), std::string("b")));
    CHECK(r.predicted_not_in_Sbar);
    CHECK_FALSE(r.corpus_complete);
    CHECK(r.defects.empty());
  }

  TEST_CASE("order 72") {
    auto r = classify_order(parse_manifest("g named:g72\nh named:g72prime\n"), 72);
    CHECK_FALSE(r.in_S);
    CHECK(r.in_Sbar);
    auto p = find_pair(r, "g", "h");
    REQUIRE(p);
    CHECK(p->conformal);
    CHECK(p->pg_tested);
    CHECK_FALSE(p->pg_isomorphic);
    CHECK_FALSE(p->group_tested);
  }

  TEST_CASE("prediction from the factorisation") {
    CHECK(not_in_Sbar_reason(16) != "");
    CHECK(not_in_Sbar_reason(48) != "");
    CHECK(not_in_Sbar_reason(27) != "");
    CHECK(not_in_Sbar_reason(250) != "");
    CHECK(not_in_Sbar_reason(8) == "");
    CHECK(not_in_Sbar_reason(72) == "");
    CHECK(not_in_Sbar_reason(18) == "");
    CHECK(not_in_Sbar_reason(1) == "");
  }

  TEST_CASE("complete corpus contradicting a prediction is a defect") {
    auto c = parse_manifest("@complete 27\na cyclic:27\nb abelian:3x9\n");
    auto r = classify_order(c, 27);
    CHECK(r.in_Sbar);
    CHECK(r.defects.size() == 1);
  }

  TEST_CASE("determinism across job counts") {
    auto c = builtin_corpus();
    for (std::size_t n : {8u, 16u, 18u, 27u, 54u}) {
      auto serial = report_json(classify_order(c, n, {1, true}));
      auto parallel = report_json(classify_order(c, n, {4, true}));
      CHECK(serial == parallel);
      CHECK(serial == report_json(classify_order(c, n, {3, true})));
    }
  }

  TEST_CASE("property: pipeline monotonicity over the corpus") {
    auto c = builtin_corpus();
    CanonicalCache cache;
    for (std::size_t n : c.orders()) {
      auto r = classify_order(c, n, {1, true}, &cache);
      CHECK(r.defects.empty());
      for (const auto& p : r.pairs) {
        CHECK((!p.group_isomorphic || p.pg_isomorphic));
        CHECK((!p.pg_isomorphic || p.conformal));
      }
      if (r.in_S) CHECK(r.in_Sbar);
      auto quick = classify_order(c, n, {1, false}, &cache);
      CHECK(quick.in_S == r.in_S);
      CHECK(quick.in_Sbar == r.in_Sbar);
    }
    std::size_t shared = 0;
    for (std::size_t n : c.orders())
      if (c.of_order(n).size() > 1) shared += c.of_order(n).size();
    CHECK(cache.size() == shared);
  }

  TEST_CASE("coprime product keeps the order-27 witness") {
    auto r = classify_order(parse_manifest("x product:(abelian:3x3x3,cyclic:2)\ny product:(heisenberg:3,cyclic:2)\n"), 54);
    CHECK_FALSE(r.in_Sbar);
    CHECK(r.Sbar_witnesses.size() == 1);
  }
}

TEST_SUITE("export") {
  TEST_CASE("order report json") {
    auto r = classify_order(load_catalog(kData / "order8.manifest"), 8);
    auto text = report_json(r);
    auto j = nlohmann::ordered_json::parse(text);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["order"] == 8);
    CHECK(j["in_S"] == true);
    CHECK(j["pairs"].size() == 10);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys.front() == "schema_version");
    CHECK(keys[2] == "order");
    CHECK(text == report_json(classify_order(load_catalog(kData / "order8.manifest"), 8)));
    CHECK(report_text(r).find("in S: yes") != std::string::npos);
  }

  TEST_CASE("verification json") {
    std::vector<CheckResult> checks(2);
    checks[0].id = 1;
    checks[0].name = "a";
    checks[0].pass = true;
    checks[1].id = 2;
    checks[1].name = "b";
    auto j = nlohmann::json::parse(checks_json(checks));
    CHECK(j["all_pass"] == false);
    CHECK(j["checks"][1]["status"] == "FAIL");
    CHECK(checks_text(checks).find("PASS  [ 1] a") == 0);
  }
}

TEST_SUITE("verify_paper") {
  TEST_CASE("all checks pass") {
    auto checks = verify_paper();
    CHECK(checks.size() >= 12);
    for (const auto& c : checks) {
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }

  TEST_CASE("corrupted presentation fails the table check") {
    VerifyOptions opt;
    opt.corrupt_presentation = true;
    opt.relabelings = 1;
    auto checks = verify_paper(opt);
    CHECK_FALSE(checks.at(0).pass);
  }
}
