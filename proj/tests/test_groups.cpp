#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmn/errors.hpp"
#include "gmn/gmn_groups.hpp"
#include "gmn/oracle.hpp"

using namespace gmn;

namespace {

GNormal N(const GroupContext& ctx, const char* s) {
  return ctx.word_to_normal(parse_word(s));
}

}  // namespace

TEST_CASE("context construction") {
  CHECK_NOTHROW(GroupContext(2, 3));
  CHECK_NOTHROW(GroupContext(2, 2, Int(3)));
  CHECK_THROWS_AS(GroupContext(1, 2), BadParameter);
  CHECK_THROWS_AS(GroupContext(2, 1), BadParameter);
  CHECK_THROWS_AS(GroupContext(2, 2, Int(1)), BadParameter);
}

TEST_CASE("word_to_normal canonical forms at m=n=2") {
  GroupContext ctx(2, 2);

  // a^2 = c lands in the tail
  GNormal c = N(ctx, "a^2");
  CHECK(c.form.syllables.empty());
  CHECK(c.form.tail == HElem{1, 0});

  // the relator collapses: c and d commute
  CHECK(ctx.equal(N(ctx, "a^2 b^2 a^-2 b^-2"), ctx.identity()));

  // a^3 = a * c
  GNormal a3 = N(ctx, "a^3");
  REQUIRE(a3.form.syllables.size() == 1);
  const auto& syl = std::get<ANormal>(a3.form.syllables[0]);
  REQUIRE(syl.syllables.size() == 1);
  CHECK(std::get<Int>(syl.syllables[0]) == 1);
  CHECK(a3.form.tail == HElem{1, 0});

  // the plain commutator does not collapse; a^-1 = a*c^-1 leaves a c-atom in
  // the final B-syllable and b^-1 = b*d^-1 puts d^-1 in the tail
  GNormal comm = N(ctx, "a b a^-1 b^-1");
  CHECK(ctx.length(comm) == 4);
  CHECK(comm.form.tail == HElem{0, -1});
  CHECK(ctx.word_to_normal(ctx.normal_to_word(comm)) == comm);
}

TEST_CASE("normal_to_word round trips") {
  for (auto [m, n] : {std::pair<int, int>{2, 2}, {2, 3}, {3, 4}}) {
    GroupContext ctx(m, n);
    CHECK(render_word(ctx.normal_to_word(ctx.identity())) == "");
    GNormal c = ctx.word_to_normal(Word{{{'a', Int(m)}}});
    CHECK(ctx.normal_to_word(c) == Word{{{'a', Int(m)}}});
    RandomWordParams params;
    params.m = m;
    params.n = n;
    for (int i = 0; i < 300; ++i) {
      Word w = random_word(1000 * m + 10 * n + i, params);
      GNormal g = ctx.word_to_normal(w);
      CHECK(ctx.word_to_normal(ctx.normal_to_word(g)) == g);
    }
  }
}

TEST_CASE("homomorphism and inverse laws") {
  GroupContext ctx(2, 3);
  RandomWordParams params;
  params.m = 2;
  params.n = 3;
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(2 * i, params), v = random_word(2 * i + 1, params);
    GNormal nu = ctx.word_to_normal(u), nv = ctx.word_to_normal(v);
    CHECK(ctx.word_to_normal(concat_words(u, v)) == ctx.multiply(nu, nv));
    CHECK(ctx.word_to_normal(invert_word(u)) == ctx.invert(nu));
    CHECK(ctx.multiply(nu, ctx.invert(nu)) == ctx.identity());
  }
}

TEST_CASE("mixed contexts rejected") {
  GroupContext c1(2, 2), c2(2, 3), c3(2, 2, Int(5));
  GNormal g = N(c1, "a b");
  CHECK_THROWS_AS(c2.multiply(g, g), MixedContexts);
  CHECK_THROWS_AS(c3.length(g), MixedContexts);
  CHECK_NOTHROW(c1.length(g));
}

TEST_CASE("project_mod_t") {
  GroupContext ctx(2, 2);
  GroupContext t3(2, 2, Int(3));

  // tail (5,-1) reduces to (2,2)
  GNormal h = N(ctx, "a^10 b^-2");
  CHECK(h.form.tail == HElem{5, -1});
  CHECK(project_mod_t(ctx, h, t3).form.tail == HElem{2, 2});

  CHECK(project_mod_t(ctx, ctx.identity(), t3) == t3.identity());

  // homomorphism
  RandomWordParams params;
  params.t = 3;
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(7000 + i, params), v = random_word(8000 + i, params);
    GNormal pu = project_mod_t(ctx, ctx.word_to_normal(u), t3);
    GNormal pv = project_mod_t(ctx, ctx.word_to_normal(v), t3);
    GNormal puv = project_mod_t(ctx, ctx.word_to_normal(concat_words(u, v)), t3);
    CHECK(puv == t3.multiply(pu, pv));
    // never increases length
    CHECK(t3.length(pu) <= ctx.length(ctx.word_to_normal(u)));
  }

  // length can drop: a d^3 a collapses mod 3 (middle atom dies, a*a = c)
  GNormal g = N(ctx, "a b^6 a");
  CHECK(ctx.length(g) == 1);  // a * d^3 * a is one A-syllable
  CHECK(std::get<ANormal>(g.form.syllables[0]).syllables.size() == 3);
  GNormal p = project_mod_t(ctx, g, t3);
  CHECK(t3.in_h(p));
  CHECK(p.form.tail == HElem{1, 0});
  // and at G-level length: (a d^3 a) * b has length 2, its image length 1
  GNormal g2 = ctx.multiply(g, N(ctx, "b"));
  CHECK(ctx.length(g2) == 2);
  CHECK(t3.length(project_mod_t(ctx, g2, t3)) == 1);

  CHECK_THROWS_AS(project_mod_t(t3, t3.identity(), t3), BadParameter);
  CHECK_THROWS_AS(project_mod_t(ctx, h, GroupContext(2, 3, Int(3))), BadParameter);
}

TEST_CASE("finite factor orders") {
  GroupContext t2(2, 2, Int(2));
  // a has order mt = 4 in A(2)
  CHECK(t2.equal(N(t2, "a^4"), t2.identity()));
  CHECK_FALSE(t2.equal(N(t2, "a^2"), t2.identity()));
  CHECK(t2.equal(N(t2, "b^4"), t2.identity()));
  // H(t) exponents live in [0, t)
  CHECK(N(t2, "a^2").form.tail == HElem{1, 0});
  CHECK(N(t2, "a^-2").form.tail == HElem{1, 0});
}

TEST_CASE("in_h and length") {
  GroupContext ctx(2, 2);
  CHECK(ctx.in_h(N(ctx, "a^2 b^2")));
  CHECK_FALSE(ctx.in_h(N(ctx, "a b")));
  CHECK(ctx.length(N(ctx, "a^2 b^2")) == 1);
  CHECK(ctx.length(N(ctx, "a b")) == 2);
  CHECK(ctx.length(N(ctx, "a b^2")) == 1);  // a * d is one A-syllable
}

TEST_CASE("Prop 2.1 invariant: g^-1 h g in H iff h in <c>") {
  for (int ti = 0; ti < 2; ++ti) {
    std::optional<Int> t;
    if (ti == 1) t = 3;
    GroupContext ctx(2, 2, t);
    // g ranges over some A-elements outside H
    for (const char* gs : {"a", "a b^2", "b^2 a", "a b^2 a", "a b^-4 a b^2"}) {
      GNormal g = N(ctx, gs);
      REQUIRE(ctx.length(g) == 1);
      REQUIRE_FALSE(ctx.in_h(g));
      for (int mu = -2; mu <= 2; ++mu) {
        for (int nu = -2; nu <= 2; ++nu) {
          GNormal h = ctx.from_h(HElem{mu, nu});
          GNormal conj = ctx.conjugate(h, g);
          bool commute = ctx.equal(ctx.multiply(g, h), ctx.multiply(h, g));
          CHECK(ctx.in_h(conj) == commute);
          CHECK(ctx.in_h(conj) == (ctx.h_reduce(HElem{0, nu}).nu == 0));
        }
      }
    }
  }
}

TEST_CASE("mirror relabeling") {
  GroupContext ctx(2, 3);
  GroupContext mctx = mirror_context(ctx);
  CHECK(mctx.m() == 3);
  CHECK(mctx.n() == 2);
  RandomWordParams params;
  params.m = 2;
  params.n = 3;
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(i, params), v = random_word(i + 5000, params);
    GNormal mu = mirror_normal(ctx, ctx.word_to_normal(u), mctx);
    GNormal mv = mirror_normal(ctx, ctx.word_to_normal(v), mctx);
    GNormal muv =
        mirror_normal(ctx, ctx.word_to_normal(concat_words(u, v)), mctx);
    CHECK(muv == mctx.multiply(mu, mv));
    CHECK(mctx.length(mu) == ctx.length(ctx.word_to_normal(u)));
  }
}
