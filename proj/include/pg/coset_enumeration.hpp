#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pg/permutation.hpp"
#include "pg/presentation.hpp"

namespace pg {

// Coset table over the trivial subgroup. Column 2g is the action of
// generator g and column 2g+1 the action of its inverse.
struct CosetTable {
  std::size_t generator_count = 0;
  std::size_t coset_count = 0;
  std::vector<std::int32_t> entries;  // coset_count * 2 * generator_count
  std::size_t total_defined = 0;      // cosets ever defined, including dead ones

  std::size_t columns() const noexcept { return 2 * generator_count; }
  std::int32_t at(std::size_t coset, std::size_t column) const noexcept {
    return entries[coset * columns() + column];
  }
  // Permutation of the cosets induced by generator g.
  Permutation generator_action(std::size_t g) const;
};

struct EnumerationOptions {
  std::size_t max_cosets = 100000;
  // When set, pending deductions are processed in a pseudo-random order drawn
  // from this seed instead of last-in first-out.
  std::optional<std::uint64_t> shuffle_seed;
};

// Felsch-style enumeration: always fill the first undefined table entry,
// push every consequence of the relators through the deduction stack and
// merge coincident cosets with union-find. Throws Overflow when more than
// max_cosets cosets are defined. The completed table is compacted and checked:
// every column is a permutation and every relator closes at every coset.
CosetTable todd_coxeter(const Presentation& p, const EnumerationOptions& options = {});

struct RealizedGroup {
  Group group;
  // Element of `group` corresponding to each generator of the presentation.
  std::vector<Element> generators;
};

// Converts the coset action into a Cayley table. Throws ClosureExceedsCap if
// the permutation group has more than `cap` elements.
RealizedGroup realize(const CosetTable& table, std::size_t cap = default_order_cap());

// Enumerate then realize; the relators are re-checked on the result.
RealizedGroup realize(const Presentation& p, const EnumerationOptions& options = {});

}  // namespace pg
