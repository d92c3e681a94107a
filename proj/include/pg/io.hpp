#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pg/group.hpp"

namespace pg {

// .cayley: first line n, then n rows of n space-separated 0-based indices.
Group parse_cayley(std::string_view text, std::string label = {});
std::string format_cayley(const Group& g);

// .perm: first line the degree, then one generator per line as a
// space-separated image list.
Group parse_perm(std::string_view text, std::string label = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace pg
