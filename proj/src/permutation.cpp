#include "pg/permutation.hpp"

#include <string>
#include <unordered_map>

#include "pg/error.hpp"

namespace pg {
namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

}  // namespace

PermutationClosure close_permutations(const std::vector<Permutation>& generators,
                                      std::size_t cap) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(ErrorCode::InvalidArgument, "generators differ in degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
      hit[v] = 1;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Element, PermHash> index{{id, 0}};
  auto intern = [&](Permutation p) -> Element {
    auto [it, inserted] = index.try_emplace(std::move(p), static_cast<Element>(elems.size()));
    if (inserted) {
      if (elems.size() >= cap) {
        throw Error(ErrorCode::ClosureExceedsCap, "closure exceeds " + std::to_string(cap));
      }
      elems.push_back(it->first);
    }
    return it->second;
  };

  // right[i * k + s] = elems[i] * generators[s]; parent/via record a BFS tree
  // so that elems[j] = elems[parent[j]] * generators[via[j]].
  std::size_t k = generators.size();
  std::vector<Element> right;
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      std::size_t before = elems.size();
      Element e = intern(compose(elems[i], generators[s]));
      right.push_back(e);
      if (elems.size() > before) {
        parent.push_back(static_cast<Element>(i));
        via.push_back(s);
      }
    }
  }
  std::vector<Element> gen_elems(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(k));

  std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) table[i * n] = static_cast<Element>(i);
  for (std::size_t j = 1; j < n; ++j) {
    Element p = parent[j];
    std::size_t s = via[j];
    for (std::size_t i = 0; i < n; ++i) table[i * n + j] = right[table[i * n + p] * k + s];
  }

  return {validate_group(std::move(table), n), std::move(gen_elems)};
}

}  // namespace pg
