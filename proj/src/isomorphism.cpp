#include "pg/isomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace pg {
namespace {

constexpr Element kUnset = ~Element{0};

struct ElementKey {
  std::uint32_t order;
  std::size_t class_size;
  std::size_t square_roots;
  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;
};

std::vector<ElementKey> element_keys(const Group& g) {
  auto ids = conjugacy_class_ids(g);
  std::vector<std::size_t> class_size(g.order(), 0);
  for (auto id : ids) ++class_size[id];
  std::vector<std::size_t> roots(g.order(), 0);
  for (Element y = 0; y < g.order(); ++y) ++roots[g.mul(y, y)];
  std::vector<ElementKey> keys(g.order());
  for (Element x = 0; x < g.order(); ++x)
    keys[x] = {g.element_order(x), class_size[ids[x]], roots[x]};
  return keys;
}

class Search {
 public:
  Search(const Group& g, const Group& h, std::vector<ElementKey> gk, std::vector<ElementKey> hk)
      : g_(g), h_(h), gkeys_(std::move(gk)), hkeys_(std::move(hk)),
        phi_(g.order(), kUnset), inv_(h.order(), kUnset) {
    choose_generators();
    phi_[0] = 0;
    inv_[0] = 0;
    mapped_.push_back(0);
  }

  std::optional<GroupMapping> run() {
    if (descend(0)) return phi_;
    return std::nullopt;
  }

 private:
  void choose_generators() {
    std::vector<std::size_t> cand_count(g_.order(), 0);
    for (Element x = 0; x < g_.order(); ++x)
      for (Element y = 0; y < h_.order(); ++y)
        if (gkeys_[x] == hkeys_[y]) ++cand_count[x];

    std::vector<char> in_closure(g_.order(), 0);
    in_closure[0] = 1;
    std::size_t size = 1;
    while (size < g_.order()) {
      Element best = kUnset;
      for (Element x = 1; x < g_.order(); ++x) {
        if (in_closure[x]) continue;
        if (best == kUnset ||
            std::make_tuple(cand_count[x], -std::int64_t(g_.element_order(x))) <
                std::make_tuple(cand_count[best], -std::int64_t(g_.element_order(best))))
          best = x;
      }
      gens_.push_back(best);
      Subgroup k = generate_subgroup(g_, gens_);
      size = k.order();
      for (Element m : k.members) in_closure[m] = 1;
    }
    for (Element x : gens_) {
      std::vector<Element> c;
      for (Element y = 0; y < h_.order(); ++y)
        if (gkeys_[x] == hkeys_[y]) c.push_back(y);
      candidates_.push_back(std::move(c));
    }
  }

  // Extends phi to the closure of gens_[0..level] under images_. On conflict
  // the partial extension is rolled back.
  bool extend(std::size_t level) {
    std::size_t start = mapped_.size();
    for (std::size_t qi = 0; qi < mapped_.size(); ++qi) {
      Element e = mapped_[qi];
      for (std::size_t i = 0; i <= level; ++i) {
        Element t = g_.mul(e, gens_[i]);
        Element img = h_.mul(phi_[e], images_[i]);
        if (phi_[t] == kUnset) {
          if (inv_[img] != kUnset) {
            undo(start);
            return false;
          }
          phi_[t] = img;
          inv_[img] = t;
          mapped_.push_back(t);
        } else if (phi_[t] != img) {
          undo(start);
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t start) {
    for (std::size_t i = start; i < mapped_.size(); ++i) {
      inv_[phi_[mapped_[i]]] = kUnset;
      phi_[mapped_[i]] = kUnset;
    }
    mapped_.resize(start);
  }

  bool descend(std::size_t level) {
    if (level == gens_.size()) {
      return mapped_.size() == g_.order() && is_homomorphism(g_, h_, phi_);
    }
    for (Element cand : candidates_[level]) {
      if (inv_[cand] != kUnset) continue;
      images_.push_back(cand);
      std::size_t start = mapped_.size();
      if (extend(level)) {
        if (descend(level + 1)) return true;
        undo(start);
      }
      images_.pop_back();
    }
    return false;
  }

  const Group& g_;
  const Group& h_;
  std::vector<ElementKey> gkeys_, hkeys_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  GroupMapping phi_;
  std::vector<Element> inv_;
  std::vector<Element> mapped_;
};

}  // namespace

bool is_homomorphism(const Group& g, const Group& h, const GroupMapping& phi) {
  if (phi.size() != g.order()) return false;
  for (Element x = 0; x < g.order(); ++x) {
    if (phi[x] >= h.order()) return false;
    for (Element y = 0; y < g.order(); ++y)
      if (phi[g.mul(x, y)] != h.mul(phi[x], phi[y])) return false;
  }
  return true;
}

std::optional<GroupMapping> are_isomorphic_groups(const Group& g, const Group& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (order_spectrum(g) != order_spectrum(h)) return std::nullopt;
  if (is_abelian(g) != is_abelian(h)) return std::nullopt;
  if (center(g).order() != center(h).order()) return std::nullopt;
  if (conjugacy_class_sizes(g) != conjugacy_class_sizes(h)) return std::nullopt;

  auto gk = element_keys(g);
  auto hk = element_keys(h);
  auto gs = gk, hs = hk;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return std::nullopt;

  return Search(g, h, std::move(gk), std::move(hk)).run();
}

}  // namespace pg
