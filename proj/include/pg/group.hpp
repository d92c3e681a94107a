#pragma once

// Finite groups given by a full multiplication (Cayley) table.
//
// Elements are the indices 0..n-1 and index 0 is always the identity. A Group
// is immutable once constructed; element orders and inverses are computed at
// construction time.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pg {

using Element = std::uint32_t;

// Largest group order any constructor will produce. Defaults to 4096 and can
// be overridden with the PG_CAP environment variable.
std::size_t default_order_cap();

// Tables with more elements than this are only checked for associativity on a
// generating set.
inline constexpr std::size_t kFullAssociativityLimit = 512;

class Group {
 public:
  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t(a) * n_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(Element a) const noexcept { return orders_[a]; }
  std::span<const std::uint32_t> element_orders() const noexcept { return orders_; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + std::size_t(a) * n_, n_};
  }
  std::span<const Element> table() const noexcept { return table_; }

  const std::string& label() const noexcept { return label_; }
  bool lightly_validated() const noexcept { return lightly_validated_; }

  Group with_label(std::string label) const;

  // 64-bit content hash of the table (FNV-1a); used as a cache key.
  std::uint64_t content_hash() const noexcept;

  friend bool operator==(const Group& a, const Group& b) noexcept {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend Group validate_group(std::vector<Element> table, std::size_t n, std::string label);
  Group() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::string label_;
  bool lightly_validated_ = false;
};

// Checks the Latin-square, identity-at-zero and associativity conditions and
// returns the Group. Throws pg::Error naming the first violation.
Group validate_group(std::vector<Element> table, std::size_t n, std::string label = {});
Group validate_group(const std::vector<std::vector<Element>>& rows, std::string label = {});

std::uint32_t element_order(const Group& g, Element x);

// x^m by square-and-multiply; x^0 is the identity.
Element power(const Group& g, Element x, std::uint64_t m);

// Sorted (order, count) pairs.
struct OrderSpectrum {
  std::vector<std::pair<std::uint32_t, std::size_t>> entries;

  std::size_t count(std::uint32_t order) const;
  std::size_t total() const;
  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

OrderSpectrum order_spectrum(const Group& g);
std::string to_string(const OrderSpectrum& s);

bool are_conformal(const Group& g, const Group& h);

// (i, j) is encoded as i * |H| + j.
Group direct_product(const Group& g, const Group& h, std::size_t cap = default_order_cap());

// Sorted member indices of a subgroup of the group it was computed from.
struct Subgroup {
  std::vector<Element> members;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(Element x) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup generate_subgroup(const Group& g, std::span<const Element> generators);
bool is_subgroup(const Group& g, std::span<const Element> members);
bool is_normal(const Group& g, const Subgroup& s);

Subgroup center(const Group& g);
bool is_abelian(const Group& g);
bool is_cyclic(const Group& g);
Element commutator(const Group& g, Element a, Element b);

// Conjugacy class index per element and the sorted multiset of class sizes.
std::vector<std::uint32_t> conjugacy_class_ids(const Group& g);
std::vector<std::size_t> conjugacy_class_sizes(const Group& g);

// Z_0 = {1} < Z_1 < ... until the series stabilises.
std::vector<Subgroup> upper_central_series(const Group& g);
bool is_nilpotent(const Group& g);
// Independent criterion: for every prime p | n, the p-elements form a
// subgroup of order equal to the p-part of n.
bool is_nilpotent_by_sylow(const Group& g);

// G = G^(0) > G^(1) > ... until the series stabilises.
std::vector<Subgroup> derived_series(const Group& g);
bool is_solvable(const Group& g);

// The elements whose order divides m, when they form a subgroup of order m.
// Throws NotHallDivisor unless m | n and gcd(m, n/m) = 1.
std::optional<Subgroup> normal_hall_subgroup(const Group& g, std::size_t m);

// Small generating set chosen greedily: repeatedly add an element outside
// the closure of the ones chosen so far.
std::vector<Element> greedy_generators(const Group& g);

// Prime factorisation as (p, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

}  // namespace pg
