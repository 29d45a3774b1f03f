#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "conjforge/exactnum/linalg.hpp"
#include "conjforge/oracle/polycyclic.hpp"
#include "conjforge/polycyclic/conjugacy.hpp"
#include "conjforge/polycyclic/eigen_frame.hpp"

using namespace conjforge;
using namespace conjforge::polycyclic;
using exactnum::IntMat;
using exactnum::IntVec;
using exactnum::is_zero;
using exactnum::operator-;

namespace {

IntMat const kA{{2, 1}, {1, 1}};

IntMat block(IntMat const &x, IntMat const &y)
{
  IntMat r(x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      r(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      r(x.rows() + i, x.cols() + j) = y(i, j);
  return r;
}

PCGroupSpec sol() { return pc_validate_spec({kA}); }
PCGroupSpec sl4() { return pc_validate_spec({block(kA, IntMat::identity(2)), block(IntMat::identity(2), kA)}); }
PCGroupSpec sol_times_z() { return pc_validate_spec({block(kA, IntMat{{1}})}); }
PCGroupSpec powers() { return pc_validate_spec({kA, kA * kA}); }

PCElement el(std::initializer_list<long> a, std::initializer_list<long> b)
{
  IntVec av, bv;
  for (long x : a)
    av.emplace_back(x);
  for (long x : b)
    bv.emplace_back(x);
  return PCElement(av, bv);
}

PCElement random_el(std::mt19937_64 &rng, PCGroupSpec const &spec, long amax, long bmax)
{
  std::uniform_int_distribution<long> da(-amax, amax), db(-bmax, bmax);
  PCElement g = PCElement::identity(spec);
  for (auto &x : g.a)
    x = da(rng);
  for (auto &x : g.b)
    x = db(rng);
  return g;
}

void expect_witness(PCOutcome const &o, PCElement const &u, PCElement const &w, PCGroupSpec const &spec)
{
  ASSERT_TRUE(o.conjugate);
  ASSERT_TRUE(o.witness);
  ASSERT_TRUE(o.certificate.verified);
  ASSERT_EQ(pc_mul(u, *o.witness, spec), pc_mul(*o.witness, w, spec));
}

} // namespace

TEST(PCSpec, ValidateExamples)
{
  auto s = sol();
  EXPECT_EQ(s.n, 2u);
  EXPECT_EQ(s.k, 1u);
  EXPECT_TRUE(s.hyperbolic.value());
  EXPECT_TRUE(s.positive_real_spectrum);
  ASSERT_TRUE(s.frame);
  EXPECT_NEAR(std::exp(s.frame->log_eigenvalue(0, 0)), (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(std::exp(s.frame->log_eigenvalue(1, 0)), (3 - std::sqrt(5.0)) / 2, 1e-12);

  auto violation = [](std::vector<IntMat> const &g) {
    try {
      pc_validate_spec(g);
    } catch (SpecError const &e) {
      return e.violation();
    }
    return SpecViolation::Empty;
  };
  EXPECT_EQ(violation({IntMat{{1, 1}, {0, 1}}}), SpecViolation::NotSemisimple);
  EXPECT_EQ(violation({kA, IntMat{{0, 1}, {1, 0}}}), SpecViolation::NotCommuting);
  EXPECT_EQ(violation({IntMat{{2, 0}, {0, 1}}}), SpecViolation::NotUnimodular);
  EXPECT_EQ(violation({kA, IntMat::identity(3)}), SpecViolation::Shape);
  EXPECT_THROW(pc_validate_spec({}), SpecError);

  auto swap = pc_validate_spec({IntMat{{0, 1}, {1, 0}}});
  EXPECT_FALSE(swap.positive_real_spectrum);
  EXPECT_FALSE(swap.hyperbolic.value());
  EXPECT_FALSE(swap.frame);
  EXPECT_FALSE(pc_validate_spec({IntMat{{0, -1}, {1, 0}}}).positive_real_spectrum);
  EXPECT_FALSE(pc_validate_spec({IntMat{{-2, -1}, {-1, -1}}}).positive_real_spectrum);

  auto four = sl4();
  EXPECT_TRUE(four.positive_real_spectrum);
  EXPECT_FALSE(four.hyperbolic);
}

TEST(PCGroup, MulExamples)
{
  auto s = sol();
  EXPECT_EQ(pc_mul(el({2, 1}, {0}), el({0, 0}, {1}), s), el({2, 1}, {1}));
  EXPECT_EQ(pc_mul(el({0, 0}, {1}), el({1, 0}, {0}), s), el({2, 1}, {1}));
  auto g = el({3, -4}, {-2});
  EXPECT_EQ(pc_mul(PCElement::identity(s), g, s), g);
  EXPECT_TRUE(pc_mul(g, pc_inv(g, s), s).is_identity());
  EXPECT_THROW(pc_mul(el({1}, {0}), g, s), std::invalid_argument);
  EXPECT_EQ(PCElement::parse("3,-4;-2"), g);
  EXPECT_EQ(g.to_string(), "3,-4;-2");
  EXPECT_THROW(PCElement::parse("3,x;1"), std::invalid_argument);
  EXPECT_EQ(pc_generators(s).size(), 6u);
}

TEST(PCGroup, AxiomsProperty)
{
  std::mt19937_64 rng(31);
  for (auto const &spec : {sol(), sl4(), sol_times_z(), powers()}) {
    for (int it = 0; it < 10000; ++it) {
      auto a = random_el(rng, spec, 20, 4), b = random_el(rng, spec, 20, 4),
           c = random_el(rng, spec, 20, 4);
      ASSERT_EQ(pc_mul(pc_mul(a, b, spec), c, spec), pc_mul(a, pc_mul(b, c, spec), spec));
      ASSERT_EQ(pc_mul(a, PCElement::identity(spec), spec), a);
      ASSERT_TRUE(pc_mul(a, pc_inv(a, spec), spec).is_identity());
      ASSERT_TRUE(pc_mul(pc_inv(a, spec), a, spec).is_identity());
    }
  }
}

TEST(PCLength, Examples)
{
  auto s = sol();
  EXPECT_EQ(pc_length_est(PCElement::identity(s), s), 0.0);
  EXPECT_EQ(pc_length_est(el({0, 0}, {-3}), s), 3.0);
  EXPECT_NEAR(pc_length_est(el({2, 1}, {0}), s), 1.585, 1e-3);
  EXPECT_LT(pc_length_est(el({2, 1}, {1}), s), pc_length_est(el({5, 1}, {1}), s));
}

TEST(PCTranslation, Examples)
{
  auto s = sol();
  for (auto m : {TranslationMethod::Auto, TranslationMethod::Numeric, TranslationMethod::ExactScan}) {
    auto same = pc_conj_translation(el({4, 7}, {0}), el({4, 7}, {0}), s, m);
    ASSERT_TRUE(same.conjugate);
    EXPECT_TRUE(same.witness->is_identity());

    auto one = pc_conj_translation(el({2, 1}, {0}), el({1, 0}, {0}), s, m);
    expect_witness(one, el({2, 1}, {0}), el({1, 0}, {0}), s);
    EXPECT_EQ(*one.witness, el({0, 0}, {1}));

    EXPECT_FALSE(pc_conj_translation(el({1, 0}, {0}), el({0, 1}, {0}), s, m).conjugate);
    EXPECT_FALSE(pc_conj_translation(el({1, 0}, {0}), el({0, 0}, {0}), s, m).conjugate);
  }
  auto far = pc_conj_translation(el({1, 0}, {0}), el({89, 55}, {0}), s);
  ASSERT_TRUE(far.conjugate);
  EXPECT_EQ(far.witness->b[0], -5); // (F11, F10) = A^5 (1, 0)

  auto swap = pc_validate_spec({IntMat{{0, 1}, {1, 0}}});
  EXPECT_THROW(pc_conj_translation(el({1, 0}, {0}), el({0, 1}, {0}), swap), UnsupportedSpec);
  EXPECT_THROW(pc_conj_translation(el({1, 0}, {1}), el({0, 1}, {0}), s), std::invalid_argument);
}

TEST(PCTranslation, StabiliserFromRationalRelation)
{
  // phi_2 = phi_1^2, so (2,-1) fixes everything and is found by reconstruction.
  auto s = powers();
  auto w = el({3, -1}, {0, 0});
  auto u = pc_conjugate(w, el({0, 0}, {3, -5}), s);
  auto o = pc_conj_translation(u, w, s);
  expect_witness(o, u, w, s);
  auto neg = pc_conj_translation(el({1, 0}, {0, 0}), el({0, 1}, {0, 0}), s);
  EXPECT_FALSE(neg.conjugate);
}

TEST(PCTranslation, NumericAgreesWithScanProperty)
{
  auto s = sol();
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> dy(-8, 8), coin(0, 4);
  int conj = 0;
  for (int it = 0; it < 1000; ++it) {
    auto w = random_el(rng, s, 30, 0);
    PCElement u = coin(rng) == 0 ? random_el(rng, s, 30, 0)
                                 : pc_conjugate(w, pc_inv(el({0, 0}, {dy(rng)}), s), s);
    auto a = pc_conj_translation(u, w, s, TranslationMethod::Numeric);
    auto b = pc_conj_translation(u, w, s, TranslationMethod::ExactScan);
    ASSERT_EQ(a.conjugate, b.conjugate) << u.to_string() << " " << w.to_string();
    if (a.conjugate) {
      ++conj;
      ASSERT_EQ(pc_mul(u, *a.witness, s), pc_mul(*a.witness, w, s));
      if (!is_zero(w.a)) {
        ASSERT_EQ(*a.witness, *b.witness);
      }
    }
  }
  EXPECT_GT(conj, 700);
}

TEST(PCNonzero, Examples)
{
  auto s = sol();
  auto u = el({0, 0}, {1}), v = el({1, 0}, {1});
  auto o = pc_conj_nonzero(u, v, s);
  expect_witness(o, u, v, s);
  EXPECT_EQ(*o.witness, el({0, 1}, {0}));
  EXPECT_EQ(pc_mul(u, *o.witness, s), el({1, 1}, {1}));

  auto same = pc_conj_nonzero(el({5, -2}, {-3}), el({5, -2}, {-3}), s);
  ASSERT_TRUE(same.conjugate);
  EXPECT_TRUE(same.witness->is_identity());

  EXPECT_FALSE(pc_conj_nonzero(el({0, 0}, {1}), el({0, 0}, {2}), s).conjugate);
  EXPECT_THROW(pc_conj_nonzero(el({0, 0}, {0}), el({0, 0}, {0}), s), std::invalid_argument);
}

TEST(PCNonzero, FourDimensionalExample)
{
  auto s = sl4();
  auto u = el({1, 0, 0, 0}, {1, 1});
  auto gamma = el({0, 1, 1, 0}, {0, 0});
  auto w = pc_conjugate(u, gamma, s);
  EXPECT_EQ(complement_index_bound(u.b, s), 1);
  auto o = pc_conj_nonzero(u, w, s);
  expect_witness(o, u, w, s);
  EXPECT_EQ(o.stats.window, "T=(1,1) d=1");
  for (std::size_t i = 0; i < 2; ++i) {
    IntVec e(2);
    e[i] = 1;
    EXPECT_EQ(orbit_order(u.a, u.b, e, s), 1);
  }
}

TEST(PCNonzero, IndexFiveMatchesBrute)
{
  // I - A^2 has determinant -5.
  auto s = sol();
  auto o = pc_conjugacy(el({1, 0}, {2}), el({0, 0}, {2}), s);
  auto brute = oracle::pc_box_conjugator(el({1, 0}, {2}), el({0, 0}, {2}), s);
  EXPECT_EQ(o.conjugate, brute.witness.has_value());
}

TEST(PCOrbitOrder, Examples)
{
  auto s = sol();
  IntVec e{1};
  EXPECT_EQ(orbit_order(IntVec(2), IntVec{3}, e, s), 1);
  EXPECT_EQ(orbit_order(IntVec{7, -3}, IntVec{1}, e, s), 1); // det(I - A) = -1
  EXPECT_EQ(complement_index_bound(IntVec{3}, s), 16);
  EXPECT_THROW(orbit_order(IntVec(2), IntVec{3}, IntVec{0}, s), std::invalid_argument);

  // phi_2 moves the eigenvalue-1 block of phi(2,0) = A^2 + I.
  auto four = sl4();
  EXPECT_EQ(complement_index_bound(IntVec{2, 0}, four), 5);
  EXPECT_THROW(orbit_order(IntVec{0, 0, 1, 0}, IntVec{2, 0}, IntVec{0, 1}, four),
               std::invalid_argument);
  EXPECT_GE(orbit_order(IntVec{1, 0, 1, 0}, IntVec{2, 0}, IntVec{1, 0}, four), 1);
}

TEST(PCOrbitOrder, BoundedAndMinimalExhaustive)
{
  // Exhaustive: t is minimal with (I - phi(t d)) u in (I - phi(v)) Z^n and t <= d.
  struct Case { PCGroupSpec spec; IntVec v; IntVec d; };
  std::vector<Case> cases{{sol(), IntVec{3}, IntVec{1}},   {sol(), IntVec{-4}, IntVec{1}},
                          {sol(), IntVec{2}, IntVec{1}},   {sol_times_z(), IntVec{3}, IntVec{1}},
                          {sl4(), IntVec{2, 0}, IntVec{1, 0}}, {powers(), IntVec{1, 1}, IntVec{0, 1}}};
  for (auto const &c : cases) {
    auto bound = complement_index_bound(c.v, c.spec);
    IntMat kmat = IntMat::identity(c.spec.n) - c.spec.phi(c.v);
    std::mt19937_64 rng(33);
    for (int it = 0; it < 40; ++it) {
      auto u = random_el(rng, c.spec, 9, 0).a;
      if (c.spec.n == 4)
        u[2] = u[3] = 0;
      if (c.spec.n == 3)
        u[2] = 0;
      int64_t t = orbit_order(u, c.v, c.d, c.spec);
      ASSERT_GE(t, 1);
      ASSERT_LE(t, bound);
      for (int64_t s = 1; s <= t; ++s) {
        IntVec sd = c.d;
        for (auto &x : sd)
          x *= s;
        bool in = exactnum::integer_solve(kmat, u - c.spec.phi(sd) * u).has_value();
        ASSERT_EQ(in, s == t) << "t=" << t << " s=" << s;
      }
    }
  }
}

TEST(PCNonzero, EigenvalueOneSplittingProperty)
{
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<long> db(-3, 3);
  for (auto const &spec : {sl4(), sol_times_z(), powers()}) {
    for (int it = 0; it < 150; ++it) {
      auto u = random_el(rng, spec, 6, 3);
      if (spec.k == 2 && it % 2 == 0)
      {
        if (spec.n == 4)
          u.b[1] = 0;
        else
          u.b[0] = -2 * u.b[1];
      }
      if (is_zero(u.b))
        u.b[0] = 1;
      auto g = random_el(rng, spec, 6, 3);
      auto w = pc_conjugate(u, g, spec);
      auto o = pc_conj_nonzero(u, w, spec, Exec::Serial);
      expect_witness(o, u, w, spec);
      if (spec.k == 1) {
        ASSERT_GE(o.witness->b[0], 0);
        ASSERT_LT(o.witness->b[0], abs(u.b[0]));
      }
      auto p = pc_conj_nonzero(u, w, spec, Exec::Parallel);
      ASSERT_EQ(p.witness, o.witness);
      ASSERT_EQ(p.stats.candidates, o.stats.candidates);
    }
  }
}

TEST(PCNonzero, ParallelMatchesSerialOnLargeBoxes)
{
  auto s = powers();
  std::mt19937_64 rng(35);
  int wide = 0;
  for (int it = 0; it < 200; ++it) {
    auto u = random_el(rng, s, 12, 3);
    if (is_zero(u.b) || u.b[0] + 2 * u.b[1] == 0)
      u.b = IntVec{2, 1};
    auto w = random_el(rng, s, 12, 0);
    w.b = u.b;
    auto a = pc_conj_nonzero(u, w, s, Exec::Serial);
    auto b = pc_conj_nonzero(u, w, s, Exec::Parallel);
    ASSERT_EQ(a.conjugate, b.conjugate);
    ASSERT_EQ(a.witness, b.witness);
    ASSERT_EQ(a.stats.candidates, b.stats.candidates);
    ASSERT_EQ(a.stats.window, b.stats.window);
    wide += a.stats.candidates > 1;
  }
  EXPECT_GT(wide, 20);
}

TEST(PCConjugacy, SolWitnessProperty)
{
  auto s = sol();
  auto const &f = *s.frame;
  double lambda = std::exp(f.log_eigenvalue(0, 0));
  std::mt19937_64 rng(36);
  int nonzero = 0;
  for (int it = 0; it < 500; ++it) {
    auto u = random_el(rng, s, 50, 6), g = random_el(rng, s, 50, 6);
    auto w = pc_conjugate(u, g, s);
    auto o = pc_conjugacy(u, w, s);
    expect_witness(o, u, w, s);
    if (u.b[0] == 0)
      continue;
    ++nonzero;
    long v = std::labs(u.b[0].get_si()), y = o.witness->b[0].get_si();
    ASSERT_GE(y, 0);
    ASSERT_LT(y, v);
    double rhs = (std::pow(lambda, double(v)) + 1) * (f.norm(u.a) + std::pow(lambda, double(y)) * f.norm(w.a));
    ASSERT_LE(f.norm(o.witness->a), rhs + 1e-6);
  }
  EXPECT_GT(nonzero, 400);
}

TEST(PCConjugacy, DispatchExamples)
{
  auto s = sol();
  EXPECT_FALSE(pc_conjugacy(el({0, 0}, {1}), el({0, 0}, {2}), s).conjugate);
  auto t = pc_conjugacy(el({2, 1}, {0}), el({1, 0}, {0}), s);
  EXPECT_EQ(*t.witness, el({0, 0}, {1}));
  auto n = pc_conjugacy(el({0, 0}, {1}), el({1, 0}, {1}), s);
  EXPECT_EQ(*n.witness, el({0, 1}, {0}));
  auto id = pc_conjugacy(el({3, 3}, {2}), el({3, 3}, {2}), s);
  EXPECT_TRUE(id.witness->is_identity());
  EXPECT_GT(t.lengths.u, 0);
}

TEST(PCConjugacy, SmallGridMatchesBrute)
{
  auto s = sol();
  std::vector<PCElement> grid;
  for (long b = -2; b <= 2; ++b)
    for (long a0 = -1; a0 <= 1; ++a0)
      for (long a1 = -1; a1 <= 1; ++a1)
        grid.push_back(el({a0, a1}, {b}));
  oracle::PCBox box{20, 4};
  int conj = 0;
  for (auto const &u : grid)
    for (auto const &v : grid) {
      if (u.b != v.b)
        continue;
      auto o = pc_conjugacy(u, v, s);
      auto brute = oracle::pc_box_conjugator(u, v, s, box);
      ASSERT_EQ(o.conjugate, brute.witness.has_value()) << u.to_string() << " " << v.to_string();
      conj += o.conjugate;
    }
  EXPECT_GT(conj, 45);
}
