#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pg/group.hpp"

namespace pg {

struct Letter {
  std::uint32_t generator;
  int exponent;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced product of letters.
using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Grammar, one statement per line ('#' starts a comment):
//
//   gens: a b x y
//   rel:  a^3, (xa)^2 = 1, ab = ba
//
// A relation is a product of factors separated by whitespace or '*'; a factor
// is a generator, a parenthesised word or factor^k for any integer k. Runs of
// letters are split into declared generator names by longest match. `u = v`
// contributes the relator u v^-1 and chains `u = v = w` contribute one
// relator per '='. Relators that freely reduce to the empty word are
// rejected.
Presentation parse_presentation(std::string_view text);

Word free_reduce(Word w);
Word inverse(const Word& w);
std::string format_word(const Presentation& p, const Word& w);
std::string format_presentation(const Presentation& p);

// Evaluates w in g given the element for each generator.
Element evaluate(const Group& g, std::span<const Element> generator_elements, const Word& w);

}  // namespace pg
