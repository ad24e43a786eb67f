#pragma once

#include <string>
#include <vector>

#include "gmn/bigint.hpp"

namespace gmn {

// A freely reduced word over the generators {a, b}. Pure syntax: no group
// relation is applied here.
struct WordFactor {
  char gen;  // 'a' or 'b'
  Int exp;   // nonzero

  bool operator==(const WordFactor&) const = default;
};

struct Word {
  // Invariants: no zero exponents, adjacent factors use distinct generators.
  std::vector<WordFactor> factors;

  bool operator==(const Word&) const = default;
  bool empty() const { return factors.empty(); }
};

// Grammar: whitespace-separated tokens `a`, `b`, `a^K`, `b^K` with K a
// signed decimal integer. Throws SyntaxError on anything else.
Word parse_word(const std::string& text);

std::string render_word(const Word& w);

Word invert_word(const Word& w);

// Concatenation with free reduction at the seam.
Word concat_words(const Word& u, const Word& v);

// Builds a Word from raw factors, merging and dropping as needed.
Word make_word(std::vector<WordFactor> factors);

}  // namespace gmn
