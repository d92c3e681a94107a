#include "pg/coset_enumeration.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "pg/error.hpp"

namespace pg {

Permutation CosetTable::generator_action(std::size_t g) const {
  Permutation p(coset_count);
  for (std::size_t c = 0; c < coset_count; ++c) p[c] = static_cast<std::uint32_t>(at(c, 2 * g));
  return p;
}

namespace {

constexpr std::int32_t kUndefined = -1;

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationOptions& opt)
      : cols_(2 * p.generators.size()), opt_(opt), by_column_(cols_) {
    for (const Word& w : p.relators) {
      std::vector<std::uint32_t> r;
      for (const Letter& l : w) r.push_back(2 * l.generator + (l.exponent < 0 ? 1 : 0));
      relators_.push_back(std::move(r));
    }
    for (std::uint32_t ri = 0; ri < relators_.size(); ++ri)
      for (std::uint32_t i = 0; i < relators_[ri].size(); ++i)
        by_column_[relators_[ri][i]].push_back({ri, i});
    if (opt_.shuffle_seed) rng_.seed(*opt_.shuffle_seed);
    new_coset();
  }

  CosetTable run() {
    while (true) {
      process_deductions();
      auto [c, x] = first_undefined();
      if (c == kUndefined) {
        if (verify_pass()) continue;
        break;
      }
      std::int32_t d = new_coset();
      set(c, x, d);
      deductions_.push_back({c, x});
    }
    return compact();
  }

 private:
  struct Deduction {
    std::int32_t coset;
    std::uint32_t column;
  };
  struct Occurrence {
    std::uint32_t relator;
    std::uint32_t offset;
  };

  static std::uint32_t inv(std::uint32_t col) { return col ^ 1u; }
  std::int32_t& entry(std::int32_t c, std::uint32_t x) { return table_[std::size_t(c) * cols_ + x]; }
  bool live(std::int32_t c) const { return parent_[c] == c; }

  void set(std::int32_t c, std::uint32_t x, std::int32_t d) {
    entry(c, x) = d;
    entry(d, inv(x)) = c;
    ++events_;
  }

  std::int32_t new_coset() {
    if (parent_.size() >= opt_.max_cosets) {
      throw Error(ErrorCode::Overflow, "coset enumeration exceeded " + std::to_string(opt_.max_cosets) + " cosets");
    }
    auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    return c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::int32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  std::pair<std::int32_t, std::uint32_t> first_undefined() {
    for (auto c = static_cast<std::int32_t>(hint_); c < static_cast<std::int32_t>(parent_.size()); ++c) {
      if (!live(c)) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        if (entry(c, x) == kUndefined) {
          hint_ = static_cast<std::size_t>(c);
          return {c, x};
        }
      }
    }
    hint_ = parent_.size();
    return {kUndefined, 0};
  }

  void merge(std::int32_t a, std::int32_t b) {
    std::int32_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    std::int32_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[hi] = lo;
    queue_.push_back(hi);
    --live_;
    ++events_;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::int32_t g = queue_[qi];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::int32_t d = entry(g, x);
        if (d == kUndefined) continue;
        entry(d, inv(x)) = kUndefined;
        hint_ = std::min(hint_, static_cast<std::size_t>(d));
        std::int32_t mu = rep(g), nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, inv(x)) != kUndefined) {
          merge(mu, entry(nu, inv(x)));
        } else {
          set(mu, x, nu);
          deductions_.push_back({mu, x});
        }
      }
    }
    hint_ = std::min(hint_, static_cast<std::size_t>(rep(a)));
  }

  // Traces relator r rotated to start at `offset` from coset a, closing a
  // one-letter gap as a deduction and reporting a mismatch as a coincidence.
  void scan(std::int32_t a, std::uint32_t r, std::uint32_t offset) {
    const auto& w = relators_[r];
    const auto len = static_cast<std::uint32_t>(w.size());
    auto letter = [&](std::uint32_t t) { return w[(offset + t) % len]; };

    std::int32_t f = a;
    std::uint32_t i = 0;
    while (i < len) {
      std::int32_t next = entry(f, letter(i));
      if (next == kUndefined) break;
      f = next;
      ++i;
    }
    if (i == len) {
      if (f != a) coincidence(f, a);
      return;
    }
    std::int32_t b = a;
    std::int64_t j = static_cast<std::int64_t>(len) - 1;
    while (j >= static_cast<std::int64_t>(i)) {
      std::int32_t next = entry(b, inv(letter(static_cast<std::uint32_t>(j))));
      if (next == kUndefined) break;
      b = next;
      --j;
    }
    if (j < static_cast<std::int64_t>(i)) {
      coincidence(f, b);
    } else if (j == static_cast<std::int64_t>(i)) {
      set(f, letter(i), b);
      deductions_.push_back({f, letter(i)});
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      Deduction d;
      if (opt_.shuffle_seed) {
        std::uniform_int_distribution<std::size_t> pick(0, deductions_.size() - 1);
        std::size_t k = pick(rng_);
        std::swap(deductions_[k], deductions_.back());
      }
      d = deductions_.back();
      deductions_.pop_back();
      if (!live(d.coset)) continue;
      for (const Occurrence& o : by_column_[d.column]) {
        if (!live(d.coset)) break;
        scan(d.coset, o.relator, o.offset);
      }
      if (!live(d.coset)) continue;
      std::int32_t target = entry(d.coset, d.column);
      if (target == kUndefined) continue;
      for (const Occurrence& o : by_column_[inv(d.column)]) {
        if (!live(target)) break;
        scan(target, o.relator, o.offset);
      }
    }
  }

  // Scans every relator from every live coset; returns true if that changed
  // the table.
  bool verify_pass() {
    std::size_t before = events_;
    for (auto c = std::int32_t{0}; c < static_cast<std::int32_t>(parent_.size()); ++c) {
      for (std::uint32_t r = 0; r < relators_.size(); ++r) {
        if (!live(c)) break;
        scan(c, r, 0);
        process_deductions();
      }
    }
    return events_ != before;
  }

  CosetTable compact() {
    std::vector<std::int32_t> renum(parent_.size(), kUndefined);
    std::size_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(static_cast<std::int32_t>(c))) renum[c] = static_cast<std::int32_t>(next++);
    CosetTable t;
    t.generator_count = cols_ / 2;
    t.coset_count = next;
    t.total_defined = parent_.size();
    t.entries.reserve(next * cols_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (renum[c] == kUndefined) continue;
      for (std::uint32_t x = 0; x < cols_; ++x)
        t.entries.push_back(renum[rep(entry(static_cast<std::int32_t>(c), x))]);
    }
    check(t);
    return t;
  }

  void check(const CosetTable& t) const {
    for (std::size_t x = 0; x < cols_; ++x) {
      std::vector<char> hit(t.coset_count, 0);
      for (std::size_t c = 0; c < t.coset_count; ++c) {
        auto d = t.at(c, x);
        if (d < 0 || hit[d] || t.at(d, inv(static_cast<std::uint32_t>(x))) != static_cast<std::int32_t>(c)) {
          throw Error(ErrorCode::Internal, "coset table column is not a permutation");
        }
        hit[d] = 1;
      }
    }
    for (const auto& w : relators_) {
      for (std::size_t c = 0; c < t.coset_count; ++c) {
        std::size_t f = c;
        for (auto x : w) f = static_cast<std::size_t>(t.at(f, x));
        if (f != c) throw Error(ErrorCode::Internal, "relator does not close");
      }
    }
  }

  std::uint32_t cols_;
  EnumerationOptions opt_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<Occurrence>> by_column_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<Deduction> deductions_;
  std::vector<std::int32_t> queue_;
  std::size_t live_ = 0;
  std::size_t hint_ = 0;
  std::size_t events_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const EnumerationOptions& options) {
  if (options.max_cosets < 1) throw Error(ErrorCode::InvalidArgument, "max_cosets must be >= 1");
  return Enumerator(p, options).run();
}

RealizedGroup realize(const CosetTable& table, std::size_t cap) {
  if (table.coset_count > cap) {
    throw Error(ErrorCode::ClosureExceedsCap,
                std::to_string(table.coset_count) + " cosets exceed cap " + std::to_string(cap));
  }
  if (table.generator_count == 0) {
    return {validate_group(std::vector<Element>{0}, 1), {}};
  }
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < table.generator_count; ++g) gens.push_back(table.generator_action(g));
  auto closure = close_permutations(gens, cap);
  if (closure.group.order() != table.coset_count) {
    throw Error(ErrorCode::Internal, "closure order differs from coset count");
  }
  return {std::move(closure.group), std::move(closure.generator_elements)};
}

RealizedGroup realize(const Presentation& p, const EnumerationOptions& options) {
  RealizedGroup r = realize(todd_coxeter(p, options));
  for (const Word& w : p.relators) {
    if (evaluate(r.group, r.generators, w) != 0) {
      throw Error(ErrorCode::Internal, "relator " + format_word(p, w) + " fails in realization");
    }
  }
  return r;
}

}  // namespace pg
