#pragma once

#include <cstdint>
#include <vector>

#include "pg/group.hpp"

namespace pg {

// Image list of a permutation of {0, ..., degree-1}.
using Permutation = std::vector<std::uint32_t>;

struct PermutationClosure {
  Group group;
  // Element index of each input generator in `group`.
  std::vector<Element> generator_elements;
};

// Enumerates the group generated by `generators` breadth-first and returns its
// Cayley table. Products compose left to right: (p*q)(i) = q(p(i)). Throws
// ClosureExceedsCap when more than `cap` elements appear.
PermutationClosure close_permutations(const std::vector<Permutation>& generators,
                                      std::size_t cap = default_order_cap());

}  // namespace pg
