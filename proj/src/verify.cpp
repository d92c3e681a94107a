#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "pg/constructions.hpp"
#include "pg/error.hpp"
#include "pg/expression.hpp"
#include "pg/isomorphism.hpp"
#include "pg/named_groups.hpp"
#include "pg/power_graph.hpp"
#include "pg/scanner.hpp"

namespace pg {

namespace {

// Collects failed expectations for one check.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool pass() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream out;
    if (pass()) {
      out << total_ << " expectations hold";
    } else {
      out << failures_.size() << "/" << total_ << " failed: " << failures_.front();
      for (std::size_t i = 1; i < failures_.size() && i < 4; ++i) out << "; " << failures_[i];
    }
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

bool same_pg(const Group& a, const Group& b) { return canonical_form(power_graph(a)) == canonical_form(power_graph(b)); }

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.directed != b.directed || a.edge_count() != b.edge_count()) return false;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    if (is_isomorphism(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, bool directed, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && coin(rng)) e.emplace_back(u, v);
  return directed ? Graph::directed_from_arcs(n, e) : Graph::undirected_from_edges(n, e);
}

std::vector<std::uint32_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Moves one edge to a random non-edge, keeping the edge count.
Graph move_edge(std::mt19937_64& rng, const Graph& g) {
  auto e = g.edges();
  std::size_t n = g.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> absent;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = g.directed ? 0 : u + 1; v < n; ++v)
      if (u != v && !g.has_edge(u, v)) absent.emplace_back(u, v);
  if (e.empty() || absent.empty()) return g;
  e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)] =
      absent[std::uniform_int_distribution<std::size_t>(0, absent.size() - 1)(rng)];
  return g.directed ? Graph::directed_from_arcs(n, e) : Graph::undirected_from_edges(n, e);
}

std::vector<std::size_t> involution_root_counts(const Group& g) {
  std::vector<std::size_t> out;
  for (Element x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) out.push_back(square_root_count(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool prime_power(std::size_t n) { return n == 1 || factorize(n).size() == 1; }

struct Context {
  explicit Context(const VerifyOptions& o) : opt(o) {}

  const VerifyOptions& opt;
  Catalog corpus = builtin_corpus();
  CanonicalCache cache;

  const Group& get(const std::string& id) const {
    for (const auto& e : corpus.entries)
      if (e.id == id) return e.group;
    throw Error(ErrorCode::Internal, "corpus lacks " + id);
  }
};

void table_one(Context& ctx, Outcome& o) {
  const OrderSpectrum expected{{{1, 1}, {2, 21}, {3, 8}, {4, 18}, {6, 24}}};
  auto first = ctx.opt.corrupt_presentation ? named::kOrder72FirstCorrupted : named::kOrder72First;
  std::pair<const char*, std::string_view> inputs[] = {{"first", first}, {"second", named::kOrder72Second}};
  for (auto [name, text] : inputs) {
    auto t0 = std::chrono::steady_clock::now();
    Group g = realize(parse_presentation(text)).group;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto spec = order_spectrum(g);
    o.expect(g.order() == 72, std::string(name) + " presentation has order " + std::to_string(g.order()));
    o.expect(spec == expected, std::string(name) + " spectrum " + to_string(spec));
    o.expect(s < 5.0, std::string(name) + " realization took " + std::to_string(s) + " s");
  }
}

void not_in_S(Context& ctx, Outcome& o) {
  const Group &g = ctx.get("named:g72"), &h = ctx.get("named:g72prime");
  o.expect(are_conformal(g, h), "order-72 groups not conformal");
  o.expect(!are_isomorphic_groups(g, h), "order-72 groups isomorphic");
}

void separation_72(Context& ctx, Outcome& o) {
  const Group &g = ctx.get("named:g72"), &h = ctx.get("named:g72prime");
  o.expect(!are_isomorphic_graphs(power_graph(g), power_graph(h)), "order-72 power graphs isomorphic");
  auto full_root_involutions = [](const Group& x) {
    std::size_t order4 = order_spectrum(x).count(4), hits = 0;
    auto prof = root_profile(x, 2);
    for (Element e = 1; e < x.order(); ++e) {
      auto it = prof[e].find(4);
      if (x.element_order(e) == 2 && it != prof[e].end() && it->second == order4) ++hits;
    }
    return hits;
  };
  o.expect(full_root_involutions(g) == 1, "first group: involutions rooted by all order-4 elements: " +
                                              std::to_string(full_root_involutions(g)));
  o.expect(full_root_involutions(h) == 0, "second group: involutions rooted by all order-4 elements: " +
                                              std::to_string(full_root_involutions(h)));
}

void collapse_16(Context& ctx, Outcome& o) {
  const Group &g = ctx.get("abelian:2x2x4"), &h = ctx.get("named:d8c4");
  o.expect(h.order() == 16, "central product has order " + std::to_string(h.order()));
  o.expect(same_pg(g, h), "P(C2xC2xC4) and P(D8oC4) not isomorphic");
  o.expect(!are_isomorphic_groups(g, h), "C2xC2xC4 isomorphic to D8oC4");
  for (const char* a : {"cyclic:2", "abelian:2x2"}) {
    const Group& A = ctx.get(a);
    auto pg = product_adjacency_2group(g, A), ph = product_adjacency_2group(h, A);
    o.expect(canonical_form(pg) == canonical_form(ph), std::string("product graphs differ for A = ") + a);
  }
}

void conformal_not_pg(Context& ctx, Outcome& o) {
  const Group &g = ctx.get("abelian:4x4"), &h = ctx.get("product:(cyclic:2,quaternion:8)");
  o.expect(are_conformal(g, h), "C4xC4 and C2xQ8 not conformal");
  o.expect(involution_root_counts(g) == std::vector<std::size_t>{4, 4, 4}, "C4xC4 involution root counts");
  o.expect(involution_root_counts(h) == std::vector<std::size_t>{0, 0, 12}, "C2xQ8 involution root counts");
  o.expect(!same_pg(g, h), "P(C4xC4) and P(C2xQ8) isomorphic");
}

void exponent_p(Context& ctx, Outcome& o) {
  const Group &g = ctx.get("abelian:3x3x3"), &h = ctx.get("heisenberg:3");
  o.expect(same_pg(g, h), "P(C3^3) and P(Heis(3)) not isomorphic");
  o.expect(!are_isomorphic_groups(g, h), "C3^3 isomorphic to Heis(3)");
}

void coprime_product(Context& ctx, Outcome& o) {
  const Group &g = ctx.get("product:(abelian:3x3x3,cyclic:2)"), &h = ctx.get("product:(heisenberg:3,cyclic:2)");
  o.expect(g.order() == 54 && h.order() == 54, "products do not have order 54");
  o.expect(same_pg(g, h), "P(C3^3 x C2) and P(Heis(3) x C2) not isomorphic");
  o.expect(!are_isomorphic_groups(g, h), "order-54 products isomorphic");
}

void product_rule(Context& ctx, Outcome& o) {
  std::size_t tested = 0;
  for (const auto& e : ctx.corpus.entries) {
    if (e.order > 16 || !prime_power(e.order) || e.order % 2) continue;
    for (const char* a : {"cyclic:2", "abelian:2x2"}) {
      const Group& A = ctx.get(a);
      auto rule = product_adjacency_2group(e.group, A);
      auto direct = power_graph(direct_product(e.group, A));
      o.expect(rule.undirected == direct.undirected, e.id + " x " + a);
      ++tested;
    }
  }
  o.note(std::to_string(tested) + " products compared");
}

void completeness_law(Context& ctx, Outcome& o) {
  for (const auto& e : ctx.corpus.entries) {
    if (e.order > 64) continue;
    auto p = power_graph(e.group);
    bool expected = is_cyclic(e.group) && prime_power(e.order);
    o.expect(is_complete(p) == expected, e.id + " completeness");
    o.expect(is_connected(p), e.id + " connectivity");
  }
}

void memberships(Context& ctx, Outcome& o) {
  for (std::size_t n : {8u, 18u}) {
    auto gs = ctx.corpus.of_order(n);
    o.expect(gs.size() == 5, "corpus has " + std::to_string(gs.size()) + " groups of order " + std::to_string(n));
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        o.expect(ctx.cache.get(gs[i]->group) != ctx.cache.get(gs[j]->group),
                 "P(" + gs[i]->id + ") isomorphic to P(" + gs[j]->id + ")");
        o.expect(!are_isomorphic_groups(gs[i]->group, gs[j]->group), gs[i]->id + " isomorphic to " + gs[j]->id);
      }
    auto r = classify_order(ctx.corpus, n, {ctx.opt.jobs, false}, &ctx.cache);
    o.expect(r.in_S && r.in_Sbar && r.corpus_complete, "order " + std::to_string(n) + " classification");
  }
}

void inheritance(Context& ctx, Outcome& o) {
  std::size_t pairs = 0;
  for (std::size_t n : ctx.corpus.orders()) {
    auto gs = ctx.corpus.of_order(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (ctx.cache.get(gs[i]->group) != ctx.cache.get(gs[j]->group)) continue;
        ++pairs;
        o.expect(is_nilpotent(gs[i]->group) == is_nilpotent(gs[j]->group), gs[i]->id + " / " + gs[j]->id);
      }
  }
  o.note(std::to_string(pairs) + " pg-isomorphic pairs");
  for (const char* id : {"named:g72", "named:g72prime"}) {
    const Group& g = ctx.get(id);
    auto hall = normal_hall_subgroup(g, 9);
    o.expect(hall.has_value() && is_normal(g, *hall), std::string(id) + " normal Hall subgroup of order 9");
    o.expect(is_solvable(g), std::string(id) + " solvable");
  }
}

void robustness(Context& ctx, Outcome& o) {
  std::mt19937_64 rng(ctx.opt.seed);
  for (const auto& e : ctx.corpus.entries) {
    auto p = power_graph(e.group);
    auto base = canonical_form(p.undirected);
    bool stable = true;
    for (unsigned k = 0; k < ctx.opt.relabelings && stable; ++k)
      stable = canonical_form(p.undirected.relabel(random_permutation(rng, e.order))).bytes == base.bytes;
    o.expect(stable, e.id + " canonical form depends on labeling");
  }

  std::size_t battery = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      for (bool directed : {false, true}) {
        double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
        Graph a = random_graph(rng, n, directed, density);
        Graph b = rep % 2 ? move_edge(rng, a) : a.relabel(random_permutation(rng, n));
        bool fast = are_isomorphic_graphs(a, b).has_value();
        o.expect(fast == brute_force_isomorphic(a, b), "battery graph pair on " + std::to_string(n) + " vertices");
        ++battery;
      }
    }
  }
  o.note(std::to_string(battery) + " battery pairs");

  std::size_t pairs = 0;
  for (std::size_t n : ctx.corpus.orders()) {
    auto r = classify_order(ctx.corpus, n, {ctx.opt.jobs, true}, &ctx.cache);
    pairs += r.pairs.size();
    for (const auto& d : r.defects) o.expect(false, d);
    for (const auto& p : r.pairs) {
      o.expect(!p.group_isomorphic || p.pg_isomorphic, "monotonicity " + p.a + " / " + p.b);
      o.expect(!p.pg_isomorphic || p.conformal, "pg-iso without conformality " + p.a + " / " + p.b);
    }
  }
  o.note(std::to_string(pairs) + " corpus pairs");
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
  Context ctx{options};
  using Check = void (*)(Context&, Outcome&);
  const std::pair<const char*, Check> checks[] = {
      {"order-72 presentations: order and spectrum", table_one},
      {"order-72 groups conformal, not isomorphic", not_in_S},
      {"order-72 power graphs not isomorphic; root profiles", separation_72},
      {"order-16 power-graph collapse and product propagation", collapse_16},
      {"C4xC4 vs C2xQ8: conformal, distinct power graphs", conformal_not_pg},
      {"C3^3 vs Heis(3): isomorphic power graphs", exponent_p},
      {"coprime product keeps power graphs isomorphic", coprime_product},
      {"product adjacency rule equals direct power graph", product_rule},
      {"complete iff cyclic of prime-power order; connected", completeness_law},
      {"orders 8 and 18: pairwise distinct power graphs", memberships},
      {"nilpotency, Hall subgroup and solvability on instances", inheritance},
      {"canonical form robustness and pipeline monotonicity", robustness},
  };
  std::vector<CheckResult> out;
  int id = 0;
  for (auto [name, fn] : checks) {
    CheckResult r;
    r.id = ++id;
    r.name = name;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(ctx, o);
      r.pass = o.pass();
      r.detail = o.detail();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pg
