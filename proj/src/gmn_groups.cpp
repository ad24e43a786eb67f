#include "gmn/gmn_groups.hpp"

#include "gmn/errors.hpp"

namespace gmn {

namespace {

GEngine make_g_engine(const Int& m, const Int& n, const std::optional<Int>& t) {
  AEngine a_engine(CyclicFactor{m, t}, HOverCFactor{t});
  BEngine b_engine(CyclicFactor{n, t}, HOverDFactor{t});
  return GEngine(AFactor{std::move(a_engine)}, BFactor{std::move(b_engine)});
}

}  // namespace

GroupContext::GroupContext(Int m, Int n, std::optional<Int> t)
    : m_(std::move(m)),
      n_(std::move(n)),
      t_(std::move(t)),
      key_{m_, n_, t_},
      g_engine_(make_g_engine(m_, n_, t_)) {
  if (m_ < 2 || n_ < 2)
    throw BadParameter("group parameters require m >= 2 and n >= 2");
  if (t_ && *t_ < 2) throw BadParameter("modulus t must be at least 2");
}

HElem GroupContext::h_reduce(const HElem& x) const {
  if (!t_) return x;
  return {floor_mod(x.mu, *t_), floor_mod(x.nu, *t_)};
}

HElem GroupContext::h_mul(const HElem& x, const HElem& y) const {
  return h_reduce({x.mu + y.mu, x.nu + y.nu});
}

HElem GroupContext::h_inv(const HElem& x) const {
  return h_reduce({-x.mu, -x.nu});
}

void GroupContext::check(const GNormal& g) const {
  if (g.key != key_)
    throw MixedContexts("normal form belongs to a different group context");
}

GNormal GroupContext::word_to_normal(const Word& w) const {
  GEngine::Normal n = g_engine_.identity();
  for (const auto& f : w.factors) {
    if (f.gen == 'a')
      g_engine_.push(n, a_engine().from_left(f.exp));
    else
      g_engine_.push(n, b_engine().from_left(f.exp));
  }
  return wrap(std::move(n));
}

namespace {

void append_a_normal(std::vector<WordFactor>& out, const ANormal& x, const Int& m,
                     const Int& n) {
  for (const auto& s : x.syllables) {
    if (std::holds_alternative<Int>(s))
      out.push_back({'a', std::get<Int>(s)});
    else
      out.push_back({'b', std::get<HElem>(s).nu * n});
  }
  out.push_back({'a', x.tail * m});
}

void append_b_normal(std::vector<WordFactor>& out, const BNormal& x, const Int& m,
                     const Int& n) {
  for (const auto& s : x.syllables) {
    if (std::holds_alternative<Int>(s))
      out.push_back({'b', std::get<Int>(s)});
    else
      out.push_back({'a', std::get<HElem>(s).mu * m});
  }
  out.push_back({'b', x.tail * n});
}

}  // namespace

Word GroupContext::normal_to_word(const GNormal& g) const {
  check(g);
  std::vector<WordFactor> factors;
  for (const auto& s : g.form.syllables) {
    if (std::holds_alternative<ANormal>(s))
      append_a_normal(factors, std::get<ANormal>(s), m_, n_);
    else
      append_b_normal(factors, std::get<BNormal>(s), m_, n_);
  }
  factors.push_back({'a', g.form.tail.mu * m_});
  factors.push_back({'b', g.form.tail.nu * n_});
  return make_word(std::move(factors));
}

GNormal GroupContext::multiply(const GNormal& u, const GNormal& v) const {
  check(u);
  check(v);
  return wrap(g_engine_.multiply(u.form, v.form));
}

GNormal GroupContext::invert(const GNormal& u) const {
  check(u);
  return wrap(g_engine_.invert(u.form));
}

GNormal GroupContext::conjugate(const GNormal& u, const GNormal& z) const {
  return multiply(multiply(invert(z), u), z);
}

bool GroupContext::equal(const GNormal& u, const GNormal& v) const {
  check(u);
  check(v);
  return u.form == v.form;
}

Int GroupContext::length(const GNormal& u) const {
  check(u);
  return g_engine_.length(u.form);
}

bool GroupContext::in_h(const GNormal& u) const {
  check(u);
  return g_engine_.in_amalgam(u.form);
}

std::pair<GNormal, GNormal> GroupContext::cyclically_reduce(const GNormal& u) const {
  check(u);
  auto [core, conj] = g_engine_.cyclically_reduce(u.form);
  return {wrap(std::move(core)), wrap(std::move(conj))};
}

GNormal project_mod_t(const GroupContext& src, const GNormal& g,
                      const GroupContext& target) {
  src.check(g);
  if (src.modulus())
    throw BadParameter("project_mod_t: source context must have infinite modulus");
  if (!target.modulus())
    throw BadParameter("project_mod_t: target context must have a finite modulus");
  if (target.m() != src.m() || target.n() != src.n())
    throw BadParameter("project_mod_t: target context has different m, n");
  return target.word_to_normal(src.normal_to_word(g));
}

GroupContext mirror_context(const GroupContext& ctx) {
  return GroupContext(ctx.n(), ctx.m(), ctx.modulus());
}

Word mirror_word(const Word& w) {
  std::vector<WordFactor> factors;
  factors.reserve(w.factors.size());
  for (const auto& f : w.factors)
    factors.push_back({f.gen == 'a' ? 'b' : 'a', f.exp});
  return make_word(std::move(factors));
}

HElem mirror_h(const HElem& h) { return {h.nu, h.mu}; }

GNormal mirror_normal(const GroupContext& src, const GNormal& g,
                      const GroupContext& dst) {
  src.check(g);
  if (dst.m() != src.n() || dst.n() != src.m() || dst.modulus() != src.modulus())
    throw BadParameter("mirror_normal: destination is not the mirrored context");
  return dst.word_to_normal(mirror_word(src.normal_to_word(g)));
}

}  // namespace gmn
