#include "gmn/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "gmn/errors.hpp"

namespace gmn {

namespace {

std::string canonical_key(const GroupContext& ctx, const Word& w) {
  return render_word(ctx.normal_to_word(ctx.word_to_normal(w)));
}

// Enumerates alternating exponent vectors of a fixed syllable count in
// lexicographic order and hands each resulting word to the sink.
template <typename Sink>
void walk_words(size_t count, const Int& max_exp, Sink&& sink) {
  if (count == 0) {
    sink(Word{});
    return;
  }
  const long long e = static_cast<long long>(max_exp);
  std::vector<long long> exps(count, -e);
  for (char start : {'a', 'b'}) {
    std::fill(exps.begin(), exps.end(), -e);
    for (;;) {
      bool has_zero = false;
      for (long long x : exps) has_zero |= (x == 0);
      if (!has_zero) {
        std::vector<WordFactor> factors;
        factors.reserve(count);
        char gen = start;
        for (long long x : exps) {
          factors.push_back({gen, Int(x)});
          gen = (gen == 'a') ? 'b' : 'a';
        }
        sink(Word{std::move(factors)});
      }
      size_t i = count;
      while (i > 0 && exps[i - 1] == e) exps[--i] = -e;
      if (i == 0) break;
      ++exps[i - 1];
    }
  }
}

}  // namespace

std::vector<Word> enumerate_words(const GroupContext& ctx, const SearchBound& bound) {
  if (bound.max_exponent < 0)
    throw BadParameter("enumerate_words: negative exponent bound");
  std::vector<Word> out;
  std::set<std::string> seen;
  for (size_t count = 0; count <= bound.max_syllables; ++count) {
    walk_words(count, bound.max_exponent, [&](Word w) {
      if (seen.insert(canonical_key(ctx, w)).second) out.push_back(std::move(w));
    });
  }
  return out;
}

std::optional<Word> brute_force_conjugator(const GroupContext& ctx,
                                           const GNormal& f, const GNormal& g,
                                           const SearchBound& bound) {
  ctx.check(f);
  ctx.check(g);
  std::set<std::string> seen;
  std::optional<Word> found;
  for (size_t count = 0; count <= bound.max_syllables && !found; ++count) {
    walk_words(count, bound.max_exponent, [&](const Word& w) {
      if (found) return;
      if (!seen.insert(canonical_key(ctx, w)).second) return;
      GNormal z = ctx.word_to_normal(w);
      if (ctx.equal(ctx.conjugate(f, z), g)) found = w;
    });
  }
  return found;
}

std::vector<HElem> exhaustive_h_conjugator(const GroupContext& ctx,
                                           const GNormal& f, const GNormal& g) {
  ctx.check(f);
  ctx.check(g);
  if (!ctx.modulus())
    throw PreconditionViolated("exhaustive_h_conjugator: needs a finite modulus");
  if (ctx.length(f) != ctx.length(g) || ctx.length(f) <= 1)
    throw PreconditionViolated("exhaustive_h_conjugator: needs equal lengths > 1");
  std::vector<HElem> out;
  const Int t = *ctx.modulus();
  for (Int mu = 0; mu < t; ++mu) {
    for (Int nu = 0; nu < t; ++nu) {
      HElem h{mu, nu};
      if (ctx.equal(ctx.conjugate(g, ctx.from_h(h)), f)) out.push_back(h);
    }
  }
  if (out.size() > 1)
    throw InternalCheckFailed("H(t)-conjugator is not unique");
  return out;
}

std::pair<Int, Int> abelianization(const Word& w) {
  Int a = 0;
  Int b = 0;
  for (const auto& f : w.factors) (f.gen == 'a' ? a : b) += f.exp;
  return {a, b};
}

Word random_word(std::uint64_t seed, const RandomWordParams& params) {
  if (params.min_syllables > params.max_syllables)
    throw BadParameter("random_word: empty length range");
  if (params.max_exponent < 1)
    throw BadParameter("random_word: empty exponent range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> len_dist(params.min_syllables,
                                                 params.max_syllables);
  const long long e = static_cast<long long>(params.max_exponent);
  std::uniform_int_distribution<long long> exp_dist(-e, e);
  std::uniform_int_distribution<int> pct(0, 99);
  auto nonzero = [&] {
    long long x = 0;
    while (x == 0) x = exp_dist(rng);
    return x;
  };

  const size_t count = len_dist(rng);
  std::vector<WordFactor> factors;
  factors.reserve(count);
  char gen = (pct(rng) < 50) ? 'a' : 'b';
  for (size_t i = 0; i < count; ++i) {
    Int exp = nonzero();
    if (pct(rng) < 20) {
      exp *= (gen == 'a') ? params.m : params.n;
      if (params.t && pct(rng) < 50) exp *= *params.t;
    }
    factors.push_back({gen, std::move(exp)});
    gen = (gen == 'a') ? 'b' : 'a';
  }
  return Word{std::move(factors)};
}

}  // namespace gmn
