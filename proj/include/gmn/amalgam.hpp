#pragma once

#include <concepts>
#include <utility>
#include <variant>
#include <vector>

#include "gmn/bigint.hpp"
#include "gmn/errors.hpp"

namespace gmn {

// A factor of a free product with amalgamation. `decompose` splits g into a
// canonical coset representative of g·Am and the amalgam part, so that
// g = rep * am and rep is trivial exactly when g lies in the amalgam.
template <typename F>
concept AmalgamFactor = requires(const F f, const typename F::Elem& x,
                                 const typename F::Amalgam& h) {
  typename F::Elem;
  typename F::Amalgam;
  { f.mul(x, x) } -> std::same_as<typename F::Elem>;
  { f.inv(x) } -> std::same_as<typename F::Elem>;
  { f.identity() } -> std::same_as<typename F::Elem>;
  { f.is_identity(x) } -> std::same_as<bool>;
  { f.decompose(x) } -> std::same_as<std::pair<typename F::Elem, typename F::Amalgam>>;
  { f.embed(h) } -> std::same_as<typename F::Elem>;
  { f.am_mul(h, h) } -> std::same_as<typename F::Amalgam>;
  { f.am_inv(h) } -> std::same_as<typename F::Amalgam>;
  { f.am_identity() } -> std::same_as<typename F::Amalgam>;
};

// Normal-form arithmetic for (Left * Right; Am). Canonical form keeps coset
// representatives on the left and the amalgam part as a single tail on the
// right: g = s_1 s_2 ... s_r * tail, tags strictly alternating, no s_i in
// the amalgam.
template <AmalgamFactor LeftF, AmalgamFactor RightF>
  requires std::same_as<typename LeftF::Amalgam, typename RightF::Amalgam>
class AmalgamEngine {
 public:
  using L = typename LeftF::Elem;
  using R = typename RightF::Elem;
  using Am = typename LeftF::Amalgam;
  using Syllable = std::variant<L, R>;

  struct Normal {
    std::vector<Syllable> syllables;
    Am tail;

    bool operator==(const Normal&) const = default;
  };

  AmalgamEngine(LeftF left, RightF right)
      : left_(std::move(left)), right_(std::move(right)) {}

  const LeftF& left() const { return left_; }
  const RightF& right() const { return right_; }

  Normal identity() const { return Normal{{}, left_.am_identity()}; }

  bool is_identity(const Normal& u) const {
    return u.syllables.empty() && u.tail == left_.am_identity();
  }

  // True iff the element lies in the amalgamated subgroup.
  bool in_amalgam(const Normal& u) const { return u.syllables.empty(); }

  Normal from_left(const L& x) const {
    Normal n = identity();
    push_left(n, x);
    return n;
  }

  Normal from_right(const R& x) const {
    Normal n = identity();
    push_right(n, x);
    return n;
  }

  Normal from_amalgam(const Am& h) const { return Normal{{}, h}; }

  Normal normalize(const std::vector<Syllable>& seq) const {
    Normal n = identity();
    for (const auto& s : seq) push(n, s);
    return n;
  }

  void push(Normal& n, const Syllable& s) const {
    if (std::holds_alternative<L>(s))
      push_left(n, std::get<L>(s));
    else
      push_right(n, std::get<R>(s));
  }

  void push_amalgam(Normal& n, const Am& h) const {
    n.tail = left_.am_mul(n.tail, h);
  }

  Normal multiply(const Normal& u, const Normal& v) const {
    Normal n = u;
    for (const auto& s : v.syllables) push(n, s);
    push_amalgam(n, v.tail);
    return n;
  }

  Normal invert(const Normal& u) const {
    Normal n = from_amalgam(left_.am_inv(u.tail));
    for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it) {
      if (std::holds_alternative<L>(*it))
        push_left(n, left_.inv(std::get<L>(*it)));
      else
        push_right(n, right_.inv(std::get<R>(*it)));
    }
    return n;
  }

  bool equal(const Normal& u, const Normal& v) const { return u == v; }

  // Syllable count, except that amalgam elements count as length-1 elements
  // of a factor.
  Int length(const Normal& u) const {
    return u.syllables.empty() ? Int(1) : Int(u.syllables.size());
  }

  bool cyclically_reduced(const Normal& u) const {
    if (u.syllables.size() <= 1) return true;
    return u.syllables.front().index() != u.syllables.back().index();
  }

  // Returns (core, conj) with core = conj^-1 * u * conj, stripping first/last
  // same-factor pairs from the outside in.
  std::pair<Normal, Normal> cyclically_reduce(const Normal& u) const {
    Normal core = u;
    Normal conj = identity();
    while (!cyclically_reduced(core)) {
      Normal s = normalize({core.syllables.front()});
      core = multiply(multiply(invert(s), core), s);
      conj = multiply(conj, s);
    }
    return {core, conj};
  }

  // The components x_1, ..., x_r of the reduced form, with the tail folded
  // into the last one. Empty for amalgam elements.
  std::vector<Syllable> components(const Normal& u) const {
    std::vector<Syllable> comps = u.syllables;
    if (!comps.empty()) {
      if (std::holds_alternative<L>(comps.back()))
        comps.back() = left_.mul(std::get<L>(comps.back()), left_.embed(u.tail));
      else
        comps.back() = right_.mul(std::get<R>(comps.back()), right_.embed(u.tail));
    }
    return comps;
  }

  std::vector<Normal> cyclic_permutations(const Normal& u) const {
    if (!cyclically_reduced(u))
      throw NotCyclicallyReduced("cyclic_permutations: element is not cyclically reduced");
    if (u.syllables.size() <= 1) return {u};
    const std::vector<Syllable> comps = components(u);
    std::vector<Normal> out;
    out.reserve(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) {
      std::vector<Syllable> rot(comps.begin() + static_cast<long>(i), comps.end());
      rot.insert(rot.end(), comps.begin(), comps.begin() + static_cast<long>(i));
      out.push_back(normalize(rot));
    }
    return out;
  }

 private:
  void push_left(Normal& n, const L& x) const {
    L xp = left_.mul(left_.embed(n.tail), x);
    if (!n.syllables.empty() && std::holds_alternative<L>(n.syllables.back())) {
      xp = left_.mul(std::get<L>(n.syllables.back()), xp);
      n.syllables.pop_back();
    }
    auto [rep, am] = left_.decompose(xp);
    if (!left_.is_identity(rep)) n.syllables.emplace_back(std::move(rep));
    n.tail = am;
  }

  void push_right(Normal& n, const R& x) const {
    R xp = right_.mul(right_.embed(n.tail), x);
    if (!n.syllables.empty() && std::holds_alternative<R>(n.syllables.back())) {
      xp = right_.mul(std::get<R>(n.syllables.back()), xp);
      n.syllables.pop_back();
    }
    auto [rep, am] = right_.decompose(xp);
    if (!right_.is_identity(rep)) n.syllables.emplace_back(std::move(rep));
    n.tail = am;
  }

  LeftF left_;
  RightF right_;
};

}  // namespace gmn
