#include "pg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pg/error.hpp"
#include "pg/permutation.hpp"

namespace pg {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos)
    lines.pop_back();
  return lines;
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc{} ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected non-negative integer");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Group parse_cayley(std::string_view text, std::string label) {
  auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty cayley file");
  auto header = parse_numbers(lines[0], 1);
  if (header.size() != 1 || header[0] == 0) {
    throw Error(ErrorCode::ParseError, "line 1: expected the group order");
  }
  std::size_t n = header[0];
  if (n > default_order_cap()) {
    throw Error(ErrorCode::ParseError, "order " + std::to_string(n) + " exceeds cap");
  }
  if (lines.size() != n + 1) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " rows, found " +
                                           std::to_string(lines.size() - 1));
  }
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = parse_numbers(lines[i + 1], i + 2);
    if (row.size() != n) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 2) + ": ragged row with " +
                                             std::to_string(row.size()) + " entries");
    }
    for (auto v : row) {
      if (v >= n) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(i + 2) + ": entry " + std::to_string(v) +
                        " out of range");
      }
      table.push_back(static_cast<Element>(v));
    }
  }
  return validate_group(std::move(table), n, std::move(label));
}

std::string format_cayley(const Group& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Element i = 0; i < g.order(); ++i) {
    auto row = g.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

Group parse_perm(std::string_view text, std::string label) {
  auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty perm file");
  auto header = parse_numbers(lines[0], 1);
  if (header.size() != 1) throw Error(ErrorCode::ParseError, "line 1: expected the degree");
  std::size_t degree = header[0];
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto nums = parse_numbers(lines[i], i + 1);
    if (nums.empty()) continue;
    if (nums.size() != degree) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 1) + ": expected " +
                                             std::to_string(degree) + " images");
    }
    Permutation p;
    for (auto v : nums) {
      if (v >= degree) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(i + 1) + ": image out of range");
      }
      p.push_back(static_cast<std::uint32_t>(v));
    }
    gens.push_back(std::move(p));
  }
  if (gens.empty()) {
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
    gens.push_back(std::move(id));
  }
  try {
    return close_permutations(gens).group.with_label(std::move(label));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::ParseError, e.what());
    throw;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace pg
