#pragma once

// Group catalogs, order classification and the verification suite.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pg/canonical.hpp"
#include "pg/group.hpp"

namespace pg {

struct CatalogEntry {
  std::string id;
  std::size_t order = 0;
  std::string source;
  Group group;
};

struct CatalogError {
  std::string id;
  std::string source;
  std::string message;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogError> errors;
  // Orders for which the manifest declares every isomorphism type present.
  std::set<std::size_t> complete_orders;

  std::vector<const CatalogEntry*> of_order(std::size_t n) const;
  std::set<std::size_t> orders() const;
  bool is_complete(std::size_t n) const { return complete_orders.count(n) != 0; }
};

// Manifest lines: `<id> <source>` or a bare `<source>` (id = source),
// `@complete <n>` and `#` comments. Relative paths resolve against `base`.
// Entry failures are collected in Catalog::errors; malformed lines and
// duplicate ids throw ParseError.
Catalog parse_manifest(std::string_view text, const std::filesystem::path& base = {},
                       std::size_t cap = default_order_cap());
Catalog load_catalog(const std::filesystem::path& manifest, std::size_t cap = default_order_cap());

// Constructions covering every group the verification suite refers to.
Catalog builtin_corpus();

// Canonical forms of undirected power graphs, keyed by group content hash.
class CanonicalCache {
 public:
  const CanonicalForm& get(const Group& g);
  std::size_t size() const;

 private:
  struct Slot {
    Group group;
    CanonicalForm form;
  };
  mutable std::mutex mutex_;
  std::map<std::uint64_t, std::vector<std::shared_ptr<Slot>>> slots_;
};

struct PairResult {
  std::string a, b;
  bool conformal = false;
  bool pg_isomorphic = false;
  bool group_isomorphic = false;
  // False when the pipeline skipped the test because an earlier one decided it.
  bool pg_tested = false;
  bool group_tested = false;
};

struct OrderReport {
  std::size_t order = 0;
  std::vector<std::string> ids;
  std::vector<PairResult> pairs;
  bool in_S = true;
  bool in_Sbar = true;
  std::vector<std::pair<std::string, std::string>> S_witnesses;
  std::vector<std::pair<std::string, std::string>> Sbar_witnesses;
  bool corpus_complete = false;
  // Set when 16 | n or p^3 | n for an odd prime p.
  bool predicted_not_in_Sbar = false;
  std::string prediction_reason;
  std::vector<std::string> defects;
};

struct ClassifyOptions {
  unsigned jobs = 1;
  // Compute all three relations for every pair instead of short-circuiting.
  bool exhaustive = false;
};

OrderReport classify_order(const Catalog& c, std::size_t n, const ClassifyOptions& options = {},
                           CanonicalCache* cache = nullptr);

// Reason string if the factorisation of n forces n outside S-bar, else empty.
std::string not_in_Sbar_reason(std::size_t n);

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  // Replaces the first order-72 presentation by a corrupted copy.
  bool corrupt_presentation = false;
  unsigned jobs = 1;
  unsigned relabelings = 100;
  std::uint64_t seed = 0x5eed;
};

std::vector<CheckResult> verify_paper(const VerifyOptions& options = {});

inline constexpr int kReportSchemaVersion = 1;

std::string report_json(const OrderReport& r);
std::string report_text(const OrderReport& r);
std::string checks_json(const std::vector<CheckResult>& checks);
std::string checks_text(const std::vector<CheckResult>& checks);

}  // namespace pg
