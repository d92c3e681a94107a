#include "pg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pg/error.hpp"

namespace pg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::IdentityNotZero: return "IdentityNotZero";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::ProductTooLarge: return "ProductTooLarge";
    case ErrorCode::NotHallDivisor: return "NotHallDivisor";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::NotQuaternionOrder: return "NotQuaternionOrder";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyRelator: return "EmptyRelator";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::NotTwoGroup: return "NotTwoGroup";
    case ErrorCode::NotElementaryAbelianTwoGroup: return "NotElementaryAbelianTwoGroup";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::size_t default_order_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("PG_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{4096};
  }();
  return cap;
}

namespace {

std::vector<Element> closure_of(std::size_t n, const std::vector<Element>& table,
                                std::span<const Element> gens) {
  std::vector<char> seen(n, 0);
  std::vector<Element> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      Element p = table[std::size_t(members[i]) * n + g];
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> greedy_generators_raw(std::size_t n, const std::vector<Element>& table) {
  std::vector<Element> gens;
  std::vector<char> in_closure(n, 0);
  in_closure[0] = 1;
  std::size_t size = 1;
  while (size < n) {
    Element pick = 0;
    for (Element x = 1; x < n; ++x) {
      if (!in_closure[x]) {
        pick = x;
        break;
      }
    }
    gens.push_back(pick);
    auto members = closure_of(n, table, gens);
    size = members.size();
    for (Element m : members) in_closure[m] = 1;
  }
  return gens;
}

}  // namespace

Group validate_group(std::vector<Element> table, std::size_t n, std::string label) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  if (table.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "table has " + std::to_string(table.size()) +
                                                " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= n) {
      throw Error(ErrorCode::NotLatinSquare, "entry (" + std::to_string(k / n) + "," +
                                                 std::to_string(k % n) + ") out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != i || table[i * n] != i) {
      throw Error(ErrorCode::IdentityNotZero,
                  "row/column " + std::to_string(i) + " disagrees with index 0 as identity");
    }
  }
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < n; ++j) {
      Element v = table[i * n + j];
      if (seen[v] == stamp) {
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " repeats " +
                                                   std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < n; ++i) {
      Element v = table[i * n + j];
      if (seen[v] == stamp) {
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(j) + " repeats " +
                                                   std::to_string(v));
      }
      seen[v] = stamp;
    }
  }

  auto at = [&](std::size_t a, std::size_t b) { return std::size_t(table[a * n + b]); };
  auto fail_assoc = [](std::size_t i, std::size_t j, std::size_t k) {
    throw Error(ErrorCode::NotAssociative, "(" + std::to_string(i) + "," + std::to_string(j) +
                                               "," + std::to_string(k) + ")");
  };
  bool light = n > kFullAssociativityLimit;
  if (!light) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t ij = at(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (at(ij, k) != at(i, at(j, k))) fail_assoc(i, j, k);
      }
  } else {
    // Light's test: associativity on a generating set suffices for a Latin
    // square with identity.
    for (Element g : greedy_generators_raw(n, table))
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (at(at(i, j), g) != at(i, at(j, g))) fail_assoc(i, j, g);
  }

  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.lightly_validated_ = light;
  g.inverse_.assign(n, 0);
  g.orders_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.table_[i * n + j] == 0) {
        g.inverse_[i] = static_cast<Element>(j);
        break;
      }
    }
    std::uint32_t k = 1;
    for (Element p = static_cast<Element>(i); p != 0; p = g.table_[std::size_t(p) * n + i]) ++k;
    g.orders_[i] = k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.table_[std::size_t(g.inverse_[i]) * n + i] != 0) {
      throw Error(ErrorCode::NotAssociative, "element " + std::to_string(i) +
                                                 " has no two-sided inverse");
    }
  }
  return g;
}

Group validate_group(const std::vector<std::vector<Element>>& rows, std::string label) {
  std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " has " +
                                                 std::to_string(rows[i].size()) + " entries");
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return validate_group(std::move(flat), n, std::move(label));
}

Group Group::with_label(std::string label) const {
  Group copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::uint64_t Group::content_hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(n_);
  for (Element e : table_) mix(e);
  return h;
}

std::uint32_t element_order(const Group& g, Element x) { return g.element_order(x); }

Element power(const Group& g, Element x, std::uint64_t m) {
  m %= g.element_order(x);
  Element result = 0;
  Element base = x;
  while (m > 0) {
    if (m & 1u) result = g.mul(result, base);
    base = g.mul(base, base);
    m >>= 1;
  }
  return result;
}

std::size_t OrderSpectrum::count(std::uint32_t order) const {
  for (const auto& [o, c] : entries)
    if (o == order) return c;
  return 0;
}

std::size_t OrderSpectrum::total() const {
  std::size_t t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

OrderSpectrum order_spectrum(const Group& g) {
  std::map<std::uint32_t, std::size_t> counts;
  for (std::uint32_t o : g.element_orders()) ++counts[o];
  OrderSpectrum s;
  s.entries.assign(counts.begin(), counts.end());
  return s;
}

std::string to_string(const OrderSpectrum& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [o, c] : s.entries) {
    if (!first) out << ", ";
    first = false;
    out << o << ':' << c;
  }
  out << '}';
  return out.str();
}

bool are_conformal(const Group& g, const Group& h) {
  return g.order() == h.order() && order_spectrum(g) == order_spectrum(h);
}

Group direct_product(const Group& g, const Group& h, std::size_t cap) {
  std::size_t a = g.order(), b = h.order(), n = a * b;
  if (n > cap) {
    throw Error(ErrorCode::ProductTooLarge,
                std::to_string(a) + " x " + std::to_string(b) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t x1 = x / b, x2 = x % b;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t y1 = y / b, y2 = y % b;
      table[x * n + y] = static_cast<Element>(g.mul(Element(x1), Element(y1)) * b +
                                              h.mul(Element(x2), Element(y2)));
    }
  }
  std::string label;
  if (!g.label().empty() && !h.label().empty()) label = g.label() + " x " + h.label();
  return validate_group(std::move(table), n, std::move(label));
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

Subgroup generate_subgroup(const Group& g, std::span<const Element> generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      Element p = g.mul(members[i], s);
      if (!seen[p]) {
        seen[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

bool is_subgroup(const Group& g, std::span<const Element> members) {
  if (members.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Element m : members) {
    if (m >= g.order()) return false;
    in[m] = 1;
  }
  if (!in[0]) return false;
  for (Element a : members) {
    if (!in[g.inverse(a)]) return false;
    for (Element b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& s) {
  std::vector<char> in(g.order(), 0);
  for (Element m : s.members) in[m] = 1;
  for (Element x = 0; x < g.order(); ++x) {
    Element xi = g.inverse(x);
    for (Element m : s.members)
      if (!in[g.mul(g.mul(x, m), xi)]) return false;
  }
  return true;
}

Subgroup center(const Group& g) {
  Subgroup z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.members.push_back(x);
  }
  return z;
}

bool is_abelian(const Group& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_cyclic(const Group& g) {
  for (std::uint32_t o : g.element_orders())
    if (o == g.order()) return true;
  return false;
}

Element commutator(const Group& g, Element a, Element b) {
  return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
}

std::vector<std::uint32_t> conjugacy_class_ids(const Group& g) {
  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> ids(g.order(), unset);
  std::uint32_t next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (ids[x] != unset) continue;
    for (Element y = 0; y < g.order(); ++y) ids[g.mul(g.mul(y, x), g.inverse(y))] = next;
    ++next;
  }
  return ids;
}

std::vector<std::size_t> conjugacy_class_sizes(const Group& g) {
  auto ids = conjugacy_class_ids(g);
  std::map<std::uint32_t, std::size_t> sizes;
  for (auto id : ids) ++sizes[id];
  std::vector<std::size_t> out;
  for (const auto& kv : sizes) out.push_back(kv.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> upper_central_series(const Group& g) {
  std::vector<Subgroup> series{Subgroup{{0}}};
  while (true) {
    const Subgroup& last = series.back();
    std::vector<char> in(g.order(), 0);
    for (Element m : last.members) in[m] = 1;
    Subgroup next;
    for (Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Element y = 0; y < g.order() && ok; ++y) ok = in[commutator(g, x, y)];
      if (ok) next.members.push_back(x);
    }
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const Group& g) { return upper_central_series(g).back().order() == g.order(); }

bool is_nilpotent_by_sylow(const Group& g) {
  for (auto [p, e] : factorize(g.order())) {
    std::size_t p_part = 1;
    for (unsigned i = 0; i < e; ++i) p_part *= p;
    std::vector<Element> p_elements;
    for (Element x = 0; x < g.order(); ++x) {
      std::uint64_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) p_elements.push_back(x);
    }
    if (p_elements.size() != p_part || !is_subgroup(g, p_elements)) return false;
  }
  return true;
}

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series;
  Subgroup whole;
  whole.members.resize(g.order());
  std::iota(whole.members.begin(), whole.members.end(), Element{0});
  series.push_back(std::move(whole));
  while (true) {
    const Subgroup& last = series.back();
    std::vector<char> is_comm(g.order(), 0);
    std::vector<Element> comms;
    for (Element a : last.members)
      for (Element b : last.members) {
        Element c = commutator(g, a, b);
        if (!is_comm[c]) {
          is_comm[c] = 1;
          comms.push_back(c);
        }
      }
    Subgroup next = generate_subgroup(g, comms);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Group& g) { return derived_series(g).back().order() == 1; }

std::optional<Subgroup> normal_hall_subgroup(const Group& g, std::size_t m) {
  std::size_t n = g.order();
  if (m == 0 || n % m != 0 || std::gcd(m, n / m) != 1) {
    throw Error(ErrorCode::NotHallDivisor,
                std::to_string(m) + " is not a Hall divisor of " + std::to_string(n));
  }
  Subgroup s;
  for (Element x = 0; x < n; ++x)
    if (m % g.element_order(x) == 0) s.members.push_back(x);
  if (s.order() != m || !is_subgroup(g, s.members)) return std::nullopt;
  return s;
}

std::vector<Element> greedy_generators(const Group& g) {
  std::vector<Element> table(g.table().begin(), g.table().end());
  return greedy_generators_raw(g.order(), table);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace pg
