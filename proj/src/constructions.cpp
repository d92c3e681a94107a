#include "pg/constructions.hpp"

#include <string>

#include "pg/error.hpp"

namespace pg {
namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::ProductTooLarge,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <class Mul>
Group from_rule(std::size_t n, std::string label, Mul mul) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(mul(i, j));
  return validate_group(std::move(table), n, std::move(label));
}

}  // namespace

Group cyclic(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  check_cap(n, cap);
  return from_rule(n, "C" + std::to_string(n), [n](std::size_t i, std::size_t j) { return (i + j) % n; });
}

Group abelian(std::span<const std::size_t> factors, std::size_t cap) {
  std::size_t n = 1;
  std::string label;
  for (std::size_t f : factors) {
    if (f < 2) throw Error(ErrorCode::InvalidArgument, "invariant factors must be >= 2");
    n *= f;
    check_cap(n, cap);
    label += (label.empty() ? "C" : " x C") + std::to_string(f);
  }
  if (label.empty()) label = "C1";
  // Mixed radix with factors[0] most significant.
  return from_rule(n, label, [&](std::size_t i, std::size_t j) {
    std::size_t out = 0, scale = 1;
    for (std::size_t k = factors.size(); k-- > 0;) {
      std::size_t f = factors[k];
      out += ((i % f + j % f) % f) * scale;
      i /= f;
      j /= f;
      scale *= f;
    }
    return out;
  });
}

Group abelian(std::initializer_list<std::size_t> factors, std::size_t cap) {
  return abelian(std::span<const std::size_t>(factors.begin(), factors.size()), cap);
}

Group elementary_abelian(std::size_t p, std::size_t rank, std::size_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  std::vector<std::size_t> factors(rank, p);
  return abelian(std::span<const std::size_t>(factors), cap);
}

Group dihedral(std::size_t order, std::size_t cap) {
  if (order < 2 || order % 2 != 0) {
    throw Error(ErrorCode::OddOrder, "dihedral order must be even and >= 2, got " +
                                         std::to_string(order));
  }
  check_cap(order, cap);
  std::size_t m = order / 2;
  // r^i s^e * r^j s^f = r^(i + (-1)^e j) s^(e+f)
  return from_rule(order, "D" + std::to_string(order), [m](std::size_t x, std::size_t y) {
    std::size_t i = x % m, e = x / m, j = y % m, f = y / m;
    std::size_t rot = e == 0 ? (i + j) % m : (i + m - j) % m;
    return rot + ((e + f) % 2) * m;
  });
}

Group generalized_quaternion(std::size_t order, std::size_t cap) {
  if (order < 8 || (order & (order - 1)) != 0) {
    throw Error(ErrorCode::NotQuaternionOrder,
                "order must be a power of 2 and >= 8, got " + std::to_string(order));
  }
  check_cap(order, cap);
  std::size_t m = order / 2;
  // y x = x^-1 y and y^2 = x^(m/2)
  return from_rule(order, "Q" + std::to_string(order), [m](std::size_t a, std::size_t b) {
    std::size_t i = a % m, e = a / m, j = b % m, f = b / m;
    if (e == 0) return (i + j) % m + f * m;
    std::size_t rot = (i + m - j) % m;
    if (f == 0) return rot + m;
    return (rot + m / 2) % m;
  });
}

Group heisenberg(std::size_t p, std::size_t cap) {
  if (!is_prime(p) || p == 2) {
    throw Error(ErrorCode::InvalidArgument, "heisenberg requires an odd prime, got " + std::to_string(p));
  }
  std::size_t n = p * p * p;
  check_cap(n, cap);
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
  return from_rule(n, "Heis(" + std::to_string(p) + ")", [p](std::size_t x, std::size_t y) {
    std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    return ((a + a2) % p * p + (b + b2) % p) * p + (c + c2 + a * b2) % p;
  });
}

bool is_automorphism(const Group& g, const Permutation& p) {
  if (p.size() != g.order() || p[0] != 0) return false;
  std::vector<char> hit(g.order(), 0);
  for (auto v : p) {
    if (v >= g.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (p[g.mul(a, b)] != g.mul(p[a], p[b])) return false;
  return true;
}

AutomorphismAction::AutomorphismAction(Group acting, Group target, std::vector<Permutation> images)
    : acting_(std::move(acting)), target_(std::move(target)), images_(std::move(images)) {}

void AutomorphismAction::validate() const {
  if (images_.size() != acting_.order()) {
    throw Error(ErrorCode::InvalidAction, "need one image per acting element");
  }
  for (std::size_t i = 0; i < target_.order(); ++i) {
    if (images_[0].size() != target_.order() || images_[0][i] != i) {
      throw Error(ErrorCode::InvalidAction, "identity does not act trivially");
    }
  }
  for (Element h = 0; h < acting_.order(); ++h) {
    if (!is_automorphism(target_, images_[h])) {
      throw Error(ErrorCode::InvalidAction, "image of " + std::to_string(h) + " is not an automorphism");
    }
  }
  // Homomorphism: images[h*s] = images[h] o images[s] for s in a generating set.
  for (Element s : greedy_generators(acting_)) {
    for (Element h = 0; h < acting_.order(); ++h) {
      const Permutation& hs = images_[acting_.mul(h, s)];
      for (Element n = 0; n < target_.order(); ++n) {
        if (hs[n] != images_[h][images_[s][n]]) {
          throw Error(ErrorCode::InvalidAction, "action is not a homomorphism at (" +
                                                    std::to_string(h) + "," + std::to_string(s) + ")");
        }
      }
    }
  }
}

AutomorphismAction AutomorphismAction::from_images(Group acting, Group target,
                                                   std::vector<Permutation> images) {
  AutomorphismAction a(std::move(acting), std::move(target), std::move(images));
  a.validate();
  return a;
}

AutomorphismAction AutomorphismAction::from_generators(Group acting, Group target,
                                                       std::span<const Element> generators,
                                                       std::span<const Permutation> generator_images) {
  if (generators.size() != generator_images.size()) {
    throw Error(ErrorCode::InvalidAction, "generator and image counts differ");
  }
  for (const auto& img : generator_images) {
    if (!is_automorphism(target, img)) throw Error(ErrorCode::InvalidAction, "generator image is not an automorphism");
  }
  std::size_t nt = target.order();
  Permutation id(nt);
  for (std::size_t i = 0; i < nt; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> images(acting.order());
  std::vector<char> known(acting.order(), 0);
  images[0] = id;
  known[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Element h = queue[qi];
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Element hs = acting.mul(h, generators[k]);
      Permutation comp(nt);
      for (std::size_t n = 0; n < nt; ++n) comp[n] = images[h][generator_images[k][n]];
      if (!known[hs]) {
        known[hs] = 1;
        images[hs] = std::move(comp);
        queue.push_back(hs);
      } else if (images[hs] != comp) {
        throw Error(ErrorCode::InvalidAction, "generator images do not define a homomorphism");
      }
    }
  }
  if (queue.size() != acting.order()) {
    throw Error(ErrorCode::InvalidAction, "generators do not generate the acting group");
  }
  AutomorphismAction a(std::move(acting), std::move(target), std::move(images));
  a.validate();
  return a;
}

AutomorphismAction AutomorphismAction::trivial(Group acting, Group target) {
  Permutation id(target.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> images(acting.order(), id);
  return AutomorphismAction(std::move(acting), std::move(target), std::move(images));
}

Group semidirect_product(const AutomorphismAction& action, std::size_t cap) {
  const Group& nq = action.target();
  const Group& hq = action.acting();
  std::size_t bn = hq.order();
  std::size_t n = nq.order() * bn;
  check_cap(n, cap);
  std::string label;
  if (!nq.label().empty() && !hq.label().empty()) label = nq.label() + " : " + hq.label();
  return from_rule(n, label, [&](std::size_t x, std::size_t y) {
    Element n1 = static_cast<Element>(x / bn), h1 = static_cast<Element>(x % bn);
    Element n2 = static_cast<Element>(y / bn), h2 = static_cast<Element>(y % bn);
    return std::size_t(nq.mul(n1, action.apply(h1, n2))) * bn + hq.mul(h1, h2);
  });
}

Group generalized_dihedral(const Group& a, std::size_t cap) {
  if (!is_abelian(a)) throw Error(ErrorCode::InvalidAction, "inversion is an automorphism only of abelian groups");
  Permutation inv(a.order());
  for (Element x = 0; x < a.order(); ++x) inv[x] = a.inverse(x);
  Group c2 = cyclic(2);
  std::vector<Element> gens{1};
  std::vector<Permutation> imgs{inv};
  auto action = AutomorphismAction::from_generators(c2, a, gens, imgs);
  Group g = semidirect_product(action, cap);
  return g.with_label("Dih(" + a.label() + ")");
}

}  // namespace pg
