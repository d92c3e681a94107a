#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "pg/error.hpp"
#include "pg/expression.hpp"
#include "pg/io.hpp"
#include "pg/isomorphism.hpp"
#include "pg/power_graph.hpp"
#include "pg/scanner.hpp"

namespace pg {

std::vector<const CatalogEntry*> Catalog::of_order(std::size_t n) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries)
    if (e.order == n) out.push_back(&e);
  return out;
}

std::set<std::size_t> Catalog::orders() const {
  std::set<std::size_t> out;
  for (const auto& e : entries) out.insert(e.order);
  return out;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

Catalog parse_manifest(std::string_view text, const std::filesystem::path& base, std::size_t cap) {
  Catalog c;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    auto where = "manifest line " + std::to_string(line_no);
    if (tok[0] == "@complete") {
      if (tok.size() < 2) throw Error(ErrorCode::ParseError, where + ": @complete needs an order");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        try {
          std::size_t pos = 0;
          unsigned long long n = std::stoull(tok[i], &pos);
          if (pos != tok[i].size() || n == 0) throw std::invalid_argument("");
          c.complete_orders.insert(n);
        } catch (const std::logic_error&) {
          throw Error(ErrorCode::ParseError, where + ": bad order '" + tok[i] + "'");
        }
      }
      continue;
    }
    if (tok[0].front() == '@') throw Error(ErrorCode::ParseError, where + ": unknown directive " + tok[0]);
    if (tok.size() > 2) throw Error(ErrorCode::ParseError, where + ": expected '<id> <source>'");
    std::string id = tok[0], source = tok.size() == 2 ? tok[1] : tok[0];
    if (!ids.insert(id).second) throw Error(ErrorCode::ParseError, where + ": duplicate id '" + id + "'");
    try {
      Group g = load_group(source, base, cap).with_label(id);
      std::size_t n = g.order();
      c.entries.push_back(CatalogEntry{id, n, source, std::move(g)});
    } catch (const Error& e) {
      c.errors.push_back(CatalogError{id, source, e.what()});
    }
  }
  return c;
}

Catalog load_catalog(const std::filesystem::path& manifest, std::size_t cap) {
  return parse_manifest(read_file(manifest), manifest.parent_path(), cap);
}

Catalog builtin_corpus() {
  static const char* const kSources[] = {
      "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "abelian:2x2", "cyclic:5", "cyclic:6", "dihedral:6",
      "cyclic:7", "cyclic:8", "abelian:2x4", "abelian:2x2x2", "dihedral:8", "quaternion:8", "cyclic:9",
      "abelian:3x3", "cyclic:10", "dihedral:10", "cyclic:12", "dihedral:12", "cyclic:16", "abelian:2x8",
      "abelian:4x4", "abelian:2x2x4", "abelian:2x2x2x2", "dihedral:16", "quaternion:16",
      "product:(cyclic:2,quaternion:8)", "product:(dihedral:8,cyclic:2)", "named:d8c4", "cyclic:18",
      "abelian:3x6", "dihedral:18", "gdihedral:3x3", "product:(cyclic:3,dihedral:6)", "cyclic:27",
      "abelian:3x3x3", "heisenberg:3", "product:(abelian:3x3x3,cyclic:2)", "product:(heisenberg:3,cyclic:2)",
      "named:g72", "named:g72prime",
  };
  std::string manifest = "@complete 1 2 3 4 5 6 7 8 9 10 18\n";
  for (const char* s : kSources) manifest += std::string(s) + "\n";
  Catalog c = parse_manifest(manifest);
  if (!c.errors.empty()) throw Error(ErrorCode::Internal, "builtin corpus: " + c.errors.front().message);
  return c;
}

const CanonicalForm& CanonicalCache::get(const Group& g) {
  std::uint64_t key = g.content_hash();
  {
    std::lock_guard lock(mutex_);
    for (const auto& s : slots_[key])
      if (s->group == g) return s->form;
  }
  auto slot = std::make_shared<Slot>(Slot{g, canonical_form(power_graph(g))});
  std::lock_guard lock(mutex_);
  auto& bucket = slots_[key];
  for (const auto& s : bucket)
    if (s->group == g) return s->form;
  bucket.push_back(slot);
  return slot->form;
}

std::size_t CanonicalCache::size() const {
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (const auto& [k, v] : slots_) n += v.size();
  return n;
}

std::string not_in_Sbar_reason(std::size_t n) {
  for (auto [p, e] : factorize(n)) {
    if (p == 2 && e >= 4) return "16 divides " + std::to_string(n);
    if (p != 2 && e >= 3) return std::to_string(p) + "^3 divides " + std::to_string(n);
  }
  return {};
}

namespace {

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

OrderReport classify_order(const Catalog& c, std::size_t n, const ClassifyOptions& options, CanonicalCache* cache) {
  OrderReport r;
  r.order = n;
  r.corpus_complete = c.is_complete(n);
  r.prediction_reason = not_in_Sbar_reason(n);
  r.predicted_not_in_Sbar = !r.prediction_reason.empty();

  auto groups = c.of_order(n);
  std::sort(groups.begin(), groups.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (auto* e : groups) r.ids.push_back(e->id);

  std::vector<OrderSpectrum> spectra(groups.size());
  parallel_for(groups.size(), options.jobs, [&](std::size_t i) { spectra[i] = order_spectrum(groups[i]->group); });

  CanonicalCache local;
  CanonicalCache& forms = cache ? *cache : local;

  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) index.emplace_back(i, j);
  r.pairs.resize(index.size());

  parallel_for(index.size(), options.jobs, [&](std::size_t k) {
    auto [i, j] = index[k];
    const Group &g = groups[i]->group, &h = groups[j]->group;
    PairResult& p = r.pairs[k];
    p.a = groups[i]->id;
    p.b = groups[j]->id;
    p.conformal = spectra[i] == spectra[j];
    if (p.conformal || options.exhaustive) {
      p.pg_tested = true;
      p.pg_isomorphic = forms.get(g) == forms.get(h);
    }
    if (p.pg_isomorphic || options.exhaustive) {
      p.group_tested = true;
      p.group_isomorphic = are_isomorphic_groups(g, h).has_value();
    }
  });

  for (const auto& p : r.pairs) {
    auto w = std::make_pair(p.a, p.b);
    if (p.conformal && !p.group_isomorphic) {
      r.in_S = false;
      r.S_witnesses.push_back(w);
    }
    if (p.pg_isomorphic && !p.group_isomorphic) {
      r.in_Sbar = false;
      r.Sbar_witnesses.push_back(w);
    }
    if (p.group_isomorphic && !p.pg_isomorphic) {
      r.defects.push_back("isomorphic groups with non-isomorphic power graphs: " + p.a + ", " + p.b);
    }
    if (p.pg_isomorphic && !p.conformal) {
      r.defects.push_back("isomorphic power graphs of non-conformal groups: " + p.a + ", " + p.b);
    }
  }
  if (r.in_S && !r.in_Sbar) r.defects.push_back("in S but not in S-bar");
  if (r.corpus_complete && r.predicted_not_in_Sbar && r.in_Sbar) {
    r.defects.push_back("complete corpus finds no S-bar witness although " + r.prediction_reason);
  }
  return r;
}

}  // namespace pg
