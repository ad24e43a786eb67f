#pragma once

#include <optional>
#include <utility>

#include "gmn/amalgam.hpp"
#include "gmn/bigint.hpp"
#include "gmn/words.hpp"

namespace gmn {

// An element c^mu d^nu of the free abelian subgroup H = <c, d> (or its
// quotient H(t), exponents reduced into [0, t)).
struct HElem {
  Int mu;  // exponent of c = a^m
  Int nu;  // exponent of d = b^n

  bool operator==(const HElem&) const = default;
};

// Identifies the group a normal form belongs to; used to detect mixed-context
// operations.
struct ContextKey {
  Int m;
  Int n;
  std::optional<Int> t;  // nullopt: G_mn, value: G_mn(t)

  bool operator==(const ContextKey&) const = default;
};

// --- Factor policies -------------------------------------------------------

// The cyclic factor <x> of A = (<a> * H; a^m = c) resp. B. Elements are
// exponents of the generator (reduced mod block*t when the modulus is
// finite); the amalgam is <x^block>, held as its own exponent.
struct CyclicFactor {
  Int block;              // m for <a>, n for <b>
  std::optional<Int> t;   // generator order is block*t when finite

  using Elem = Int;
  using Amalgam = Int;

  Int reduce(const Int& k) const { return t ? floor_mod(k, block * *t) : k; }
  Int am_reduce(const Int& q) const { return t ? floor_mod(q, *t) : q; }

  Elem mul(const Elem& x, const Elem& y) const { return reduce(x + y); }
  Elem inv(const Elem& x) const { return reduce(-x); }
  Elem identity() const { return Int(0); }
  bool is_identity(const Elem& x) const { return x == 0; }

  std::pair<Elem, Amalgam> decompose(const Elem& k) const {
    Int rep = floor_mod(k, block);
    Int q = am_reduce(floor_div(k, block));
    return {rep, q};
  }

  Elem embed(const Amalgam& q) const { return reduce(q * block); }

  Amalgam am_mul(const Amalgam& p, const Amalgam& q) const { return am_reduce(p + q); }
  Amalgam am_inv(const Amalgam& q) const { return am_reduce(-q); }
  Amalgam am_identity() const { return Int(0); }
};

// H as the other factor of A, with amalgam <c>. Coset representatives of
// H / <c> are the pure d-powers.
struct HOverCFactor {
  std::optional<Int> t;

  using Elem = HElem;
  using Amalgam = Int;  // exponent of c

  Int reduce(const Int& k) const { return t ? floor_mod(k, *t) : k; }
  HElem reduce_h(const HElem& h) const { return {reduce(h.mu), reduce(h.nu)}; }

  Elem mul(const Elem& x, const Elem& y) const {
    return reduce_h({x.mu + y.mu, x.nu + y.nu});
  }
  Elem inv(const Elem& x) const { return reduce_h({-x.mu, -x.nu}); }
  Elem identity() const { return HElem{0, 0}; }
  bool is_identity(const Elem& x) const { return x.mu == 0 && x.nu == 0; }

  std::pair<Elem, Amalgam> decompose(const Elem& h) const {
    return {HElem{0, h.nu}, h.mu};
  }

  Elem embed(const Amalgam& q) const { return reduce_h({q, 0}); }

  Amalgam am_mul(const Amalgam& p, const Amalgam& q) const { return reduce(p + q); }
  Amalgam am_inv(const Amalgam& q) const { return reduce(-q); }
  Amalgam am_identity() const { return Int(0); }
};

// H as the other factor of B, with amalgam <d>. Representatives of H / <d>
// are the pure c-powers.
struct HOverDFactor {
  std::optional<Int> t;

  using Elem = HElem;
  using Amalgam = Int;  // exponent of d

  Int reduce(const Int& k) const { return t ? floor_mod(k, *t) : k; }
  HElem reduce_h(const HElem& h) const { return {reduce(h.mu), reduce(h.nu)}; }

  Elem mul(const Elem& x, const Elem& y) const {
    return reduce_h({x.mu + y.mu, x.nu + y.nu});
  }
  Elem inv(const Elem& x) const { return reduce_h({-x.mu, -x.nu}); }
  Elem identity() const { return HElem{0, 0}; }
  bool is_identity(const Elem& x) const { return x.mu == 0 && x.nu == 0; }

  std::pair<Elem, Amalgam> decompose(const Elem& h) const {
    return {HElem{h.mu, 0}, h.nu};
  }

  Elem embed(const Amalgam& q) const { return reduce_h({0, q}); }

  Amalgam am_mul(const Amalgam& p, const Amalgam& q) const { return reduce(p + q); }
  Amalgam am_inv(const Amalgam& q) const { return reduce(-q); }
  Amalgam am_identity() const { return Int(0); }
};

using AEngine = AmalgamEngine<CyclicFactor, HOverCFactor>;
using BEngine = AmalgamEngine<CyclicFactor, HOverDFactor>;

// Canonical forms of elements of A and B. An ANormal's syllables alternate
// between a-atoms (Int, exponent in [1, m)) and d-atoms (HElem with mu = 0);
// the tail is a c-exponent. BNormal mirrors with b/c/d.
using ANormal = AEngine::Normal;
using BNormal = BEngine::Normal;

// A as a factor of G = (A*B; H). The H-coset representative of an A-element
// is obtained by stripping the trailing d-atom and the c-tail, so it ends
// with an a-atom; it is trivial exactly on H.
struct AFactor {
  AEngine engine;

  using Elem = ANormal;
  using Amalgam = HElem;

  Elem mul(const Elem& x, const Elem& y) const { return engine.multiply(x, y); }
  Elem inv(const Elem& x) const { return engine.invert(x); }
  Elem identity() const { return engine.identity(); }
  bool is_identity(const Elem& x) const { return engine.is_identity(x); }

  std::pair<Elem, Amalgam> decompose(const Elem& g) const {
    Elem rep = g;
    HElem am{g.tail, 0};
    rep.tail = 0;
    if (!rep.syllables.empty() &&
        std::holds_alternative<HElem>(rep.syllables.back())) {
      am.nu = std::get<HElem>(rep.syllables.back()).nu;
      rep.syllables.pop_back();
    }
    return {std::move(rep), std::move(am)};
  }

  Elem embed(const Amalgam& h) const {
    Elem n = engine.from_right(HElem{0, h.nu});
    n.tail = engine.left().am_mul(n.tail, h.mu);
    return n;
  }

  Amalgam am_mul(const Amalgam& x, const Amalgam& y) const {
    return engine.right().mul(x, y);
  }
  Amalgam am_inv(const Amalgam& x) const { return engine.right().inv(x); }
  Amalgam am_identity() const { return HElem{0, 0}; }
};

struct BFactor {
  BEngine engine;

  using Elem = BNormal;
  using Amalgam = HElem;

  Elem mul(const Elem& x, const Elem& y) const { return engine.multiply(x, y); }
  Elem inv(const Elem& x) const { return engine.invert(x); }
  Elem identity() const { return engine.identity(); }
  bool is_identity(const Elem& x) const { return engine.is_identity(x); }

  std::pair<Elem, Amalgam> decompose(const Elem& g) const {
    Elem rep = g;
    HElem am{0, g.tail};
    rep.tail = 0;
    if (!rep.syllables.empty() &&
        std::holds_alternative<HElem>(rep.syllables.back())) {
      am.mu = std::get<HElem>(rep.syllables.back()).mu;
      rep.syllables.pop_back();
    }
    return {std::move(rep), std::move(am)};
  }

  Elem embed(const Amalgam& h) const {
    Elem n = engine.from_right(HElem{h.mu, 0});
    n.tail = engine.left().am_mul(n.tail, h.nu);
    return n;
  }

  Amalgam am_mul(const Amalgam& x, const Amalgam& y) const {
    return engine.right().mul(x, y);
  }
  Amalgam am_inv(const Amalgam& x) const { return engine.right().inv(x); }
  Amalgam am_identity() const { return HElem{0, 0}; }
};

using GEngine = AmalgamEngine<AFactor, BFactor>;

// Canonical form of an element of G_mn or G_mn(t): alternating A/B coset
// representatives plus an H tail. Carries the key of the context it was built
// in; every GNormal with the same key is comparable by operator==.
struct GNormal {
  ContextKey key;
  GEngine::Normal form;

  bool operator==(const GNormal&) const = default;
};

// The parameters m, n and optional modulus t defining G_mn or G_mn(t),
// together with the three amalgam engines. Immutable.
class GroupContext {
 public:
  // Throws BadParameter unless m >= 2, n >= 2 and (absent or >= 2) t.
  GroupContext(Int m, Int n, std::optional<Int> t = std::nullopt);

  const Int& m() const { return m_; }
  const Int& n() const { return n_; }
  const std::optional<Int>& modulus() const { return t_; }
  const ContextKey& key() const { return key_; }

  const AEngine& a_engine() const { return g_engine_.left().engine; }
  const BEngine& b_engine() const { return g_engine_.right().engine; }
  const GEngine& g_engine() const { return g_engine_; }

  // --- H arithmetic ---
  HElem h_identity() const { return {0, 0}; }
  HElem h_mul(const HElem& x, const HElem& y) const;
  HElem h_inv(const HElem& x) const;
  HElem h_reduce(const HElem& x) const;

  // --- normal forms ---
  GNormal identity() const { return wrap(g_engine_.identity()); }
  GNormal word_to_normal(const Word& w) const;
  Word normal_to_word(const GNormal& g) const;

  GNormal multiply(const GNormal& u, const GNormal& v) const;
  GNormal invert(const GNormal& u) const;
  GNormal conjugate(const GNormal& u, const GNormal& z) const;  // z^-1 u z
  bool equal(const GNormal& u, const GNormal& v) const;
  Int length(const GNormal& u) const;
  bool in_h(const GNormal& u) const;
  std::pair<GNormal, GNormal> cyclically_reduce(const GNormal& u) const;

  GNormal from_a(const ANormal& x) const { return wrap(g_engine_.from_left(x)); }
  GNormal from_b(const BNormal& x) const { return wrap(g_engine_.from_right(x)); }
  GNormal from_h(const HElem& h) const {
    return wrap(g_engine_.from_amalgam(h_reduce(h)));
  }

  GNormal wrap(GEngine::Normal n) const { return GNormal{key_, std::move(n)}; }
  void check(const GNormal& g) const;

 private:
  Int m_;
  Int n_;
  std::optional<Int> t_;
  ContextKey key_;
  GEngine g_engine_;
};

// The natural homomorphism rho_t. `g` must come from an infinite-modulus
// context with the same m, n; `target` must have a finite modulus.
GNormal project_mod_t(const GroupContext& src, const GNormal& g,
                      const GroupContext& target);

// The relabeling symmetry a<->b, c<->d, m<->n: maps G_{m,n}(t) onto
// G_{n,m}(t).
GroupContext mirror_context(const GroupContext& ctx);
Word mirror_word(const Word& w);
HElem mirror_h(const HElem& h);
GNormal mirror_normal(const GroupContext& src, const GNormal& g,
                      const GroupContext& dst);

}  // namespace gmn
