#pragma once

#include <optional>
#include <vector>

#include "pg/group.hpp"

namespace pg {

// phi[x] is the image of element x.
using GroupMapping = std::vector<Element>;

// Finds an isomorphism G -> H by backtracking over images of a greedy
// generating set of G. Candidate images must agree with the generator in
// order, conjugacy class size and number of square roots; each partial
// assignment is extended by closure and abandoned on the first contradiction.
// A returned mapping has been checked against the full tables.
std::optional<GroupMapping> are_isomorphic_groups(const Group& g, const Group& h);

bool is_homomorphism(const Group& g, const Group& h, const GroupMapping& phi);

}  // namespace pg
