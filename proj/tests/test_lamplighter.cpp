#include <gtest/gtest.h>

#include <random>

#include "conjforge/lamplighter/conjugacy.hpp"
#include "conjforge/lamplighter/dl.hpp"
#include "conjforge/lamplighter/metric.hpp"
#include "conjforge/oracle/lamplighter.hpp"

using namespace conjforge;
using namespace conjforge::lamplighter;

namespace {

LLElement el(int64_t n, char const *f, uint32_t q = 2)
{ return LLElement(n, LaurentPoly::parse(f, q)); }

LLElement random_el(std::mt19937_64 &rng, uint32_t q, int span = 6)
{
  std::uniform_int_distribution<int> e(-span, span), c(0, int(q) - 1), nt(0, span);
  std::vector<std::pair<int64_t, int64_t>> t;
  int k = nt(rng);
  for (int i = 0; i < k; ++i)
    t.emplace_back(e(rng), c(rng));
  return LLElement(e(rng), LaurentPoly(q, t));
}

} // namespace

TEST(LLGroup, MulExamples)
{
  EXPECT_EQ(ll_mul(LLElement::identity(2), el(3, "1@1")), el(3, "1@1"));
  EXPECT_EQ(ll_mul(el(1, "1@0"), el(0, "1@0")), el(1, "1@0,1@1"));
  auto g = el(4, "1@-1,1@5", 3);
  EXPECT_TRUE(ll_mul(g, ll_inv(g)).is_identity());
  EXPECT_THROW(ll_mul(el(0, "", 2), el(0, "", 3)), std::invalid_argument);
}

TEST(LLGroup, AxiomsProperty)
{
  std::mt19937_64 rng(11);
  for (int it = 0; it < 10000; ++it) {
    uint32_t q = 2 + it % 3;
    auto a = random_el(rng, q), b = random_el(rng, q), c = random_el(rng, q);
    ASSERT_EQ(ll_mul(ll_mul(a, b), c), ll_mul(a, ll_mul(b, c)));
    ASSERT_EQ(ll_mul(a, LLElement::identity(q)), a);
    ASSERT_EQ(ll_mul(LLElement::identity(q), a), a);
    ASSERT_TRUE(ll_mul(a, ll_inv(a)).is_identity());
    ASSERT_TRUE(ll_mul(ll_inv(a), a).is_identity());
  }
}

TEST(LLGroup, Generators)
{
  auto g = ll_generators(2);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[2], el(-1, ""));
  EXPECT_EQ(g[3], el(-1, "1@-1"));
}

TEST(DL, BasepointAndAction)
{
  auto x = dl_basepoint(2);
  EXPECT_TRUE(x.well_formed());
  EXPECT_EQ(dl_action(LLElement::identity(2), x), x);
  auto y = dl_action(el(1, "1@0"), x);
  EXPECT_EQ(y.first.level, 1);
  EXPECT_EQ(y.first.trunc, LaurentPoly::parse("1@0", 2));
  EXPECT_EQ(y.second.level, -1);
  EXPECT_TRUE(y.second.trunc.is_zero());
  EXPECT_EQ(dl_distance(x, y), 1);
}

TEST(DL, FigureVertexBallConvention)
{
  // The level-2 first-tree ball around t^2 + 1 forgets the t^2 coefficient.
  auto p = dl_action(el(2, "1@0,1@2"), dl_basepoint(2));
  EXPECT_EQ(p.first.level, 2);
  EXPECT_EQ(p.first.trunc, LaurentPoly::parse("1@0", 2));
  EXPECT_EQ(p.second.trunc, LaurentPoly::parse("1@2", 2));
  EXPECT_EQ(dl_element(p), el(2, "1@0,1@2"));
}

TEST(DL, LeftActionProperty)
{
  std::mt19937_64 rng(12);
  for (int it = 0; it < 10000; ++it) {
    uint32_t q = 2 + it % 3;
    auto g1 = random_el(rng, q), g2 = random_el(rng, q), h = random_el(rng, q);
    DLPoint p = dl_action(h, dl_basepoint(q));
    ASSERT_TRUE(p.well_formed());
    DLPoint lhs = dl_action(ll_mul(g1, g2), p);
    ASSERT_EQ(lhs, dl_action(g1, dl_action(g2, p)));
    ASSERT_TRUE(lhs.well_formed());
    ASSERT_EQ(dl_element(lhs), ll_mul(ll_mul(g1, g2), h));
  }
}

TEST(DL, DistanceExamples)
{
  auto x = dl_basepoint(2);
  EXPECT_EQ(dl_distance(x, x), 0);
  EXPECT_EQ(dl_distance(x, dl_action(el(0, "1@0,1@2"), x)), 6);
  EXPECT_EQ(dl_distance(x, dl_action(el(5, ""), x)), 5);
}

TEST(DL, DistanceIsLeftInvariantProperty)
{
  std::mt19937_64 rng(13);
  for (int it = 0; it < 5000; ++it) {
    uint32_t q = 2 + it % 3;
    auto a = random_el(rng, q), b = random_el(rng, q), g = random_el(rng, q);
    auto x = dl_basepoint(q);
    auto pa = dl_action(a, x), pb = dl_action(b, x);
    int64_t d = dl_distance(pa, pb);
    ASSERT_EQ(d, dl_distance(dl_action(g, pa), dl_action(g, pb)));
    ASSERT_EQ(d, ll_word_length(ll_mul(ll_inv(a), b)));
    ASSERT_EQ(d, dl_distance(pb, pa));
  }
}

TEST(LLMetric, WordLengthExamples)
{
  EXPECT_EQ(ll_word_length(LLElement::identity(2)), 0);
  EXPECT_EQ(ll_word_length(el(0, "1@0,1@2")), 6);
  EXPECT_EQ(ll_word_length(el(-3, "")), 3);
  EXPECT_EQ(ll_word_length(el(0, "1@-1")), 2);
  EXPECT_EQ(ll_word_length(el(2, "1@0,1@1")), 2);
}

TEST(LLMetric, MatchesBfsExhaustively)
{
  for (auto [q, radius] : {std::pair<uint32_t, int>{2, 6}, {3, 4}}) {
    auto gs = oracle::ll_generating_set(q);
    auto ball = oracle::enumerate_ball(gs, radius);
    auto lens = ll_word_lengths(ball.elements, Exec::Serial);
    for (std::size_t i = 0; i < ball.size(); ++i)
      ASSERT_EQ(lens[i], ball.lengths[i]) << ball.elements[i].to_string();
  }
}

TEST(LLMetric, ParallelMatchesSerial)
{
  std::mt19937_64 rng(14);
  std::vector<LLElement> gs;
  for (int i = 0; i < 3000; ++i)
    gs.push_back(random_el(rng, 2 + i % 4, 10));
  EXPECT_EQ(ll_word_lengths(gs, Exec::Serial), ll_word_lengths(gs, Exec::Parallel));
}

TEST(LLMetric, InverseInvariantProperty)
{
  std::mt19937_64 rng(15);
  for (int it = 0; it < 10000; ++it) {
    auto g = random_el(rng, 2 + it % 3);
    ASSERT_EQ(ll_word_length(g), ll_word_length(ll_inv(g)));
  }
}

TEST(LLBounds, Examples)
{
  auto z = ll_length_bounds(LLElement::identity(2));
  EXPECT_EQ(z.lower(), 0);
  EXPECT_EQ(z.upper_closed_form, 0);
  EXPECT_EQ(*z.exact_unipotent, 0);
  EXPECT_EQ(*z.exact_semisimple, 0);

  auto b = ll_length_bounds(el(2, "1@0,1@1"));
  EXPECT_GE(b.lower_shift, 2);
  EXPECT_EQ(b.upper_closed_form, 4);
  int64_t len = ll_word_length(el(2, "1@0,1@1"));
  EXPECT_GE(len, b.lower());
  EXPECT_LE(len, b.upper_closed_form);

  auto c = ll_length_bounds(el(0, "1@-1"));
  EXPECT_EQ(*c.exact_unipotent, 2);
}

TEST(LLBounds, ClosedFormUpperBoundFailsForConstant)
{
  // (0, 1) has length 2 but |n| + 2(v0^- - v0) = 0.
  auto g = el(0, "1@0");
  auto b = ll_length_bounds(g);
  EXPECT_EQ(ll_word_length(g), 2);
  EXPECT_EQ(b.upper_closed_form, 0);
  EXPECT_EQ(b.upper_triangle, 2);
}

TEST(LLBounds, HoldProperty)
{
  std::mt19937_64 rng(16);
  for (int it = 0; it < 10000; ++it) {
    auto g = random_el(rng, 2 + it % 3);
    auto b = ll_length_bounds(g);
    int64_t len = ll_word_length(g);
    ASSERT_GE(len, b.lower_shift);
    ASSERT_GE(len, b.lower_support);
    ASSERT_GE(b.lower_support, b.lower_support_gap);
    if (b.exact_unipotent) {
      ASSERT_EQ(len, *b.exact_unipotent);
    }
    if (b.exact_semisimple) {
      ASSERT_EQ(len, *b.exact_semisimple);
    }
    ASSERT_LE(len, b.upper_triangle);
  }
}

TEST(LLConjugacy, Examples)
{
  auto a = ll_conjugacy(el(0, "1@0"), el(0, "1@1"));
  ASSERT_TRUE(a.conjugate);
  EXPECT_EQ(*a.witness, el(-1, ""));

  auto b = ll_conjugacy(el(1, "1@0"), el(1, "1@1"));
  ASSERT_TRUE(b.conjugate);
  EXPECT_EQ(*b.witness, el(0, "1@0"));
  EXPECT_TRUE(ll_within_bound(b));

  auto c = ll_conjugacy(el(0, "1@0"), el(0, "1@0,1@1"));
  EXPECT_FALSE(c.conjugate);

  auto d = ll_conjugacy(el(1, ""), el(2, ""));
  EXPECT_FALSE(d.conjugate);

  auto e = ll_conjugacy(el(0, ""), el(0, ""));
  ASSERT_TRUE(e.conjugate);
  EXPECT_TRUE(e.witness->is_identity());

  EXPECT_THROW(ll_conjugacy(el(0, "", 2), el(0, "", 3)), std::invalid_argument);
}

TEST(LLConjugacy, NegativeShiftUsesInverses)
{
  auto u = el(-2, "1@0,2@3", 3);
  auto g = el(1, "1@-2,1@4", 3);
  auto v = ll_conjugate(u, g);
  auto o = ll_conjugacy(u, v);
  ASSERT_TRUE(o.conjugate);
  EXPECT_EQ(ll_mul(u, *o.witness), ll_mul(*o.witness, v));
  EXPECT_GE(o.witness->n, 0);
  EXPECT_LT(o.witness->n, 2);
}

TEST(LLConjugacy, WitnessesVerifyProperty)
{
  std::mt19937_64 rng(17);
  int within = 0;
  for (int it = 0; it < 3000; ++it) {
    uint32_t q = 2 + it % 3;
    auto u = random_el(rng, q, 5), g = random_el(rng, q, 5);
    auto v = ll_conjugate(u, g);
    auto o = ll_conjugacy(u, v);
    ASSERT_TRUE(o.conjugate) << u.to_string() << " " << v.to_string();
    ASSERT_TRUE(o.certificate.verified);
    ASSERT_EQ(ll_mul(u, *o.witness), ll_mul(*o.witness, v));
    if (u.n != 0) {
      ASSERT_GE(o.witness->n, 0);
      ASSERT_LT(o.witness->n, std::llabs(u.n));
    }
    within += ll_within_bound(o);
  }
  EXPECT_EQ(within, 3000);
}
