#include "gmn/words.hpp"

#include <cctype>
#include <sstream>

#include "gmn/errors.hpp"

namespace gmn {

Word make_word(std::vector<WordFactor> factors) {
  Word w;
  for (auto& f : factors) {
    if (f.exp == 0) continue;
    if (!w.factors.empty() && w.factors.back().gen == f.gen) {
      w.factors.back().exp += f.exp;
      if (w.factors.back().exp == 0) w.factors.pop_back();
    } else {
      w.factors.push_back(std::move(f));
    }
  }
  return w;
}

namespace {

Int parse_exponent(const std::string& tok, size_t from) {
  const std::string digits = tok.substr(from);
  if (digits.empty()) throw SyntaxError("missing exponent in token '" + tok + "'");
  size_t i = 0;
  if (digits[0] == '-' || digits[0] == '+') i = 1;
  if (i == digits.size()) throw SyntaxError("malformed exponent in token '" + tok + "'");
  for (; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw SyntaxError("malformed exponent in token '" + tok + "'");
  }
  return Int(digits);
}

}  // namespace

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<WordFactor> factors;
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'a' && tok[0] != 'b')
      throw SyntaxError("unknown generator in token '" + tok + "'");
    WordFactor f{tok[0], Int(1)};
    if (tok.size() > 1) {
      if (tok[1] != '^') throw SyntaxError("unknown token '" + tok + "'");
      f.exp = parse_exponent(tok, 2);
    }
    factors.push_back(std::move(f));
  }
  return make_word(std::move(factors));
}

std::string render_word(const Word& w) {
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += ' ';
    out += f.gen;
    if (f.exp != 1) out += "^" + to_string(f.exp);
  }
  return out;
}

Word invert_word(const Word& w) {
  std::vector<WordFactor> factors;
  factors.reserve(w.factors.size());
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    factors.push_back({it->gen, -it->exp});
  return make_word(std::move(factors));
}

Word concat_words(const Word& u, const Word& v) {
  std::vector<WordFactor> factors = u.factors;
  factors.insert(factors.end(), v.factors.begin(), v.factors.end());
  return make_word(std::move(factors));
}

}  // namespace gmn
