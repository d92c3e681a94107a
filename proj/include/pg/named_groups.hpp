#pragma once

#include <string_view>

#include "pg/coset_enumeration.hpp"
#include "pg/group.hpp"

namespace pg::named {

// Two conformal, non-isomorphic groups of order 72 (SmallGroup ids 35 and
// 40), each a semidirect product of C3 x C3 by D8.
extern const std::string_view kOrder72First;
extern const std::string_view kOrder72Second;

// kOrder72First with the (xy)^4 relator replaced by (xy)^3. Used as a
// negative control for the verification suite.
extern const std::string_view kOrder72FirstCorrupted;

// Central product D8 o C4 (SmallGroup(16,13)).
extern const std::string_view kD8CentralC4;

RealizedGroup order72_first();
RealizedGroup order72_second();
Group d8_central_c4();

}  // namespace pg::named
