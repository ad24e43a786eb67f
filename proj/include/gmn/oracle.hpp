#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gmn/gmn_groups.hpp"

namespace gmn {

// Bounds for brute-force conjugator search. Enumeration is
// length-lexicographic and deduplicates candidates as group elements (via
// their canonical form), so the bounds count elements, not spellings.
struct SearchBound {
  size_t max_syllables = 3;
  Int max_exponent = 2;
};

// Every word within the bound, one spelling per group element, in
// length-lexicographic order (identity first).
std::vector<Word> enumerate_words(const GroupContext& ctx, const SearchBound& bound);

// Some z within the bound with z^-1 f z = g, or nothing (inconclusive for
// non-conjugacy).
std::optional<Word> brute_force_conjugator(const GroupContext& ctx,
                                           const GNormal& f, const GNormal& g,
                                           const SearchBound& bound);

// Tests all t^2 elements h of H(t) for h^-1 g h = f and returns the full
// solution set. Requires a finite modulus and l(f) = l(g) > 1; at most one
// solution can exist, which is re-asserted here.
std::vector<HElem> exhaustive_h_conjugator(const GroupContext& ctx,
                                           const GNormal& f, const GNormal& g);

// (sum of a-exponents, sum of b-exponents): a conjugacy invariant, since the
// defining relator is a commutator.
std::pair<Int, Int> abelianization(const Word& w);

struct RandomWordParams {
  size_t min_syllables = 0;
  size_t max_syllables = 6;
  Int max_exponent = 4;  // atom exponents drawn from [-max_exponent, max_exponent] \ {0}
  // Bias targets: ~20% of atoms are made multiples of m (a-atoms) resp. n
  // (b-atoms), half of those additionally multiples of t, to probe collapse
  // edge cases.
  Int m = 2;
  Int n = 2;
  std::optional<Int> t;
};

// Deterministic for a fixed seed; output freely reduced.
Word random_word(std::uint64_t seed, const RandomWordParams& params);

}  // namespace gmn
