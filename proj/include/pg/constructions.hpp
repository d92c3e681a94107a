#pragma once

// Named group families. Every constructor returns a validated Group.

#include <cstddef>
#include <span>
#include <vector>

#include "pg/group.hpp"
#include "pg/permutation.hpp"

namespace pg {

Group cyclic(std::size_t n, std::size_t cap = default_order_cap());

// Direct sum of cyclic groups of the given orders, first factor most
// significant in the element encoding. An empty list gives the trivial group.
Group abelian(std::span<const std::size_t> invariant_factors,
              std::size_t cap = default_order_cap());
Group abelian(std::initializer_list<std::size_t> invariant_factors,
              std::size_t cap = default_order_cap());

Group elementary_abelian(std::size_t p, std::size_t rank, std::size_t cap = default_order_cap());

// Rotations r^i are 0..m-1 and reflections r^i s are m..2m-1, m = order/2.
Group dihedral(std::size_t order, std::size_t cap = default_order_cap());

// Q_{2^k}, k >= 3: x^i y^e encoded as i + e*2^(k-1).
Group generalized_quaternion(std::size_t order, std::size_t cap = default_order_cap());

// Upper unitriangular 3x3 matrices over Z/p; exponent p for odd p.
Group heisenberg(std::size_t p, std::size_t cap = default_order_cap());

// Left action of `acting` on `target` by automorphisms:
// images[h] is the permutation of target elements induced by h.
class AutomorphismAction {
 public:
  // Extends generator images to a homomorphism acting -> Aut(target). Throws
  // InvalidAction if some image is not an automorphism or the extension is
  // inconsistent.
  static AutomorphismAction from_generators(Group acting, Group target,
                                            std::span<const Element> generators,
                                            std::span<const Permutation> generator_images);
  // Validates a fully specified action.
  static AutomorphismAction from_images(Group acting, Group target,
                                        std::vector<Permutation> images);
  static AutomorphismAction trivial(Group acting, Group target);

  const Group& acting() const noexcept { return acting_; }
  const Group& target() const noexcept { return target_; }
  Element apply(Element h, Element n) const noexcept { return images_[h][n]; }
  const Permutation& image(Element h) const noexcept { return images_[h]; }

 private:
  AutomorphismAction(Group acting, Group target, std::vector<Permutation> images);
  void validate() const;

  Group acting_;
  Group target_;
  std::vector<Permutation> images_;
};

bool is_automorphism(const Group& g, const Permutation& p);

// N x| H with (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2); (n, h) is encoded as
// n * |H| + h, so the trivial action reproduces direct_product(N, H).
Group semidirect_product(const AutomorphismAction& action, std::size_t cap = default_order_cap());

// A x| C2 with the generator acting by inversion, for abelian A.
Group generalized_dihedral(const Group& abelian_group, std::size_t cap = default_order_cap());

}  // namespace pg
