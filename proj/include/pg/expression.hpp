#pragma once

#include <filesystem>
#include <string_view>

#include "pg/group.hpp"

namespace pg {

// Construction expressions:
//
//   cyclic:6  abelian:4x4  dihedral:8  quaternion:8  heisenberg:3
//   elementary:2^3  gdihedral:3x3  product:(A,B[,C...])
//   named:d8c4  named:g72  named:g72prime
//
// product nests, e.g. product:(cyclic:2,product:(dihedral:6,cyclic:3)).
Group parse_construction(std::string_view expr, std::size_t cap = default_order_cap());

bool looks_like_construction(std::string_view source);

// A construction expression, or a path to a .cayley, .perm or .fp file.
// Relative paths are resolved against `base`.
Group load_group(std::string_view source, const std::filesystem::path& base = {},
                 std::size_t cap = default_order_cap());

}  // namespace pg
