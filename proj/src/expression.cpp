#include "pg/expression.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "pg/constructions.hpp"
#include "pg/coset_enumeration.hpp"
#include "pg/error.hpp"
#include "pg/io.hpp"
#include "pg/named_groups.hpp"

namespace pg {
namespace {

constexpr std::string_view kKinds[] = {"cyclic",     "abelian",   "dihedral", "quaternion",
                                       "heisenberg", "elementary", "gdihedral", "product",
                                       "named"};

[[noreturn]] void bad(std::string_view expr, const std::string& why) {
  throw Error(ErrorCode::ParseError, "construction '" + std::string(expr) + "': " + why);
}

std::size_t number(std::string_view expr, std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad(expr, "expected a number, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::size_t> factors(std::string_view expr, std::string_view s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t x = s.find('x', pos);
    out.push_back(number(expr, s.substr(pos, x == std::string_view::npos ? s.npos : x - pos)));
    if (x == std::string_view::npos) break;
    pos = x + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view expr, std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) bad(expr, "unbalanced parentheses");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) bad(expr, "unbalanced parentheses");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

}  // namespace

bool looks_like_construction(std::string_view source) {
  auto colon = source.find(':');
  if (colon == std::string_view::npos) return false;
  auto kind = source.substr(0, colon);
  for (auto k : kKinds)
    if (k == kind) return true;
  return false;
}

Group parse_construction(std::string_view expr, std::size_t cap) {
  expr = trim(expr);
  auto colon = expr.find(':');
  if (colon == std::string_view::npos) bad(expr, "expected kind:argument");
  std::string_view kind = expr.substr(0, colon);
  std::string_view arg = trim(expr.substr(colon + 1));
  std::string label(expr);

  if (kind == "cyclic") return cyclic(number(expr, arg), cap).with_label(label);
  if (kind == "abelian") {
    auto f = factors(expr, arg);
    return abelian(std::span<const std::size_t>(f), cap).with_label(label);
  }
  if (kind == "dihedral") return dihedral(number(expr, arg), cap).with_label(label);
  if (kind == "quaternion") return generalized_quaternion(number(expr, arg), cap).with_label(label);
  if (kind == "heisenberg") return heisenberg(number(expr, arg), cap).with_label(label);
  if (kind == "elementary") {
    auto caret = arg.find('^');
    if (caret == std::string_view::npos) bad(expr, "expected p^k");
    return elementary_abelian(number(expr, arg.substr(0, caret)), number(expr, arg.substr(caret + 1)), cap)
        .with_label(label);
  }
  if (kind == "gdihedral") {
    auto f = factors(expr, arg);
    return generalized_dihedral(abelian(std::span<const std::size_t>(f), cap), cap).with_label(label);
  }
  if (kind == "product") {
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')') bad(expr, "expected product:(A,B)");
    auto parts = split_top_level(expr, arg.substr(1, arg.size() - 2));
    if (parts.size() < 2) bad(expr, "product needs at least two factors");
    Group g = parse_construction(parts[0], cap);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_construction(parts[i], cap), cap);
    return g.with_label(label);
  }
  if (kind == "named") {
    if (arg == "d8c4") return named::d8_central_c4().with_label(label);
    if (arg == "g72") return named::order72_first().group.with_label(label);
    if (arg == "g72prime") return named::order72_second().group.with_label(label);
    bad(expr, "unknown named group");
  }
  bad(expr, "unknown kind '" + std::string(kind) + "'");
}

Group load_group(std::string_view source, const std::filesystem::path& base, std::size_t cap) {
  if (looks_like_construction(source)) return parse_construction(source, cap);
  std::filesystem::path path(source);
  if (path.is_relative() && !base.empty()) path = base / path;
  std::string ext = path.extension().string();
  std::string label(source);
  if (ext == ".cayley") return parse_cayley(read_file(path), label);
  if (ext == ".perm") return parse_perm(read_file(path), label);
  if (ext == ".fp") {
    EnumerationOptions opt;
    return realize(parse_presentation(read_file(path)), opt).group.with_label(label);
  }
  throw Error(ErrorCode::ParseError, "'" + std::string(source) +
                                         "' is neither a construction nor a .cayley/.perm/.fp file");
}

}  // namespace pg
