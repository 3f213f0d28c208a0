#include "apolar/apolarity.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

using Pts = std::vector<CoxPoint<Rational>>;

const SurfaceRing P = SurfaceRing::p1xp1();
const SurfaceRing F = SurfaceRing::f1();

CoxPoint<Rational> random_point(Rng& rng) {
  CoxPoint<Rational> p;
  for (auto& c : p) c = Rational(uniform_int(rng, -20, 20));
  if (sgn(p[0]) == 0 && sgn(p[1]) == 0) p[0] = 1;
  if (sgn(p[2]) == 0 && sgn(p[3]) == 0) p[2] = 1;
  return p;
}

// f = sum of c_i times the dual of the point powers, via functional values.
ExactForm planted(const SurfaceRing& ring, DegreeClass a, const std::vector<CoxPoint<Rational>>& pts,
                  const std::vector<Rational>& coeffs) {
  std::vector<Rational> w(dim(ring, a), Rational(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto nu = evaluation_vector(ring, a, pts[i]);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += coeffs[i] * nu[j];
  }
  return from_functional_values(ring, a, w);
}

}  // namespace

// Column j of the catalecticant holds the functional values of g_j(f).
TEST(Catalecticant, ColumnsAreDerivatives) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = random_form(F, Side::S, {3, 6}, seed);
    const DegreeClass b{1, 3};
    const auto c = catalecticant(f, b);
    const auto mons = monomials(F, b);
    for (std::size_t j = 0; j < mons.size(); ++j) {
      ExactForm g(F, Side::T, b);
      g.add_term(mons[j], 1);
      const auto vals = functional_values(diff_apply(g, f));
      for (std::size_t i = 0; i < vals.size(); ++i) EXPECT_EQ(c.matrix(i, j), vals[i]);
    }
  }
}

TEST(Catalecticant, TransposeDuality) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_form(P, Side::S, {3, 3}, seed);
    for (const auto& b : degrees_below(P, {3, 3}))
      EXPECT_EQ(catalecticant(f, b).matrix, catalecticant(f, DegreeClass{3, 3} - b).matrix.transpose());
  }
}

TEST(Orthogonal, DimensionsP1xP1) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_form(P, Side::S, {2, 2}, seed);
    EXPECT_EQ(orthogonal_component(f, {2, 1}).size(), 4u);
    EXPECT_EQ(orthogonal_component(f, {1, 2}).size(), 4u);
    EXPECT_EQ(orthogonal_component(f, {1, 1}).size(), 0u);
    // A - B not effective: all of T_B
    EXPECT_EQ(orthogonal_component(f, {3, 0}).size(), 4u);
    const auto g = random_form(P, Side::S, {3, 3}, seed);
    const std::vector<std::pair<DegreeClass, std::size_t>> expected{
        {{2, 2}, 5}, {{3, 1}, 5}, {{1, 3}, 5}, {{2, 3}, 10}, {{3, 2}, 10}, {{3, 3}, 15}};
    for (const auto& [b, n] : expected) EXPECT_EQ(orthogonal_component(g, b).size(), n);
  }
}

TEST(Orthogonal, DimensionsF1) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto f = random_form(F, Side::S, {3, 6}, seed);
    EXPECT_EQ(orthogonal_component(f, {2, 3}).size(), 2u);
    EXPECT_EQ(orthogonal_component(f, {2, 2}).size(), 0u);
    EXPECT_EQ(orthogonal_component(f, {1, 3}).size(), 0u);
  }
}

TEST(Generation, P1xP1) {
  const auto f = random_form(P, Side::S, {2, 2}, 1);
  const auto r = generation_check(f, {{2, 1}, {1, 2}, {3, 0}, {0, 3}});
  EXPECT_TRUE(r.all_ok);
  const auto* e = r.find({2, 2});
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->dim_orthogonal, 8u);
  EXPECT_EQ(span_rank(multiply_span(P, {0, 1}, {2, 1}, orthogonal_component(f, {2, 1})), 9), 8u);
}

TEST(Generation, P1xP1Cubic) {
  const auto f = random_form(P, Side::S, {3, 3}, 2);
  const auto r = generation_check(f, {{2, 2}, {3, 1}, {1, 3}, {4, 0}, {0, 4}});
  EXPECT_TRUE(r.all_ok);
  const auto i22 = orthogonal_component(f, {2, 2});
  EXPECT_TRUE(span_contains(orthogonal_component(f, {2, 3}), multiply_span(P, {0, 1}, {2, 2}, i22), 12));
  EXPECT_EQ(span_rank(multiply_span(P, {0, 1}, {2, 2}, i22), 12), 10u);
  EXPECT_EQ(span_rank(multiply_span(P, {1, 0}, {2, 2}, i22), 12), 10u);
}

TEST(Generation, MissingGeneratorsFail) {
  const auto f = random_form(P, Side::S, {3, 3}, 2);
  EXPECT_FALSE(generation_check(f, {{2, 2}}).all_ok);
}

TEST(SchemeIdeal, Dimensions) {
  Rng rng(9);
  std::vector<CoxPoint<Rational>> pts;
  for (int i = 0; i < 4; ++i) pts.push_back(random_point(rng));
  EXPECT_EQ(scheme_ideal_component(make_scheme(P, pts), {2, 1}).size(), 2u);
  EXPECT_EQ(scheme_ideal_component(make_scheme(P, {pts[0]}), {1, 0}).size(), 1u);
  std::vector<CoxPoint<Rational>> fp;
  for (int i = 0; i < 8; ++i) fp.push_back(random_point(rng));
  EXPECT_EQ(scheme_ideal_component(make_scheme(F, fp), {3, 3}).size(), 2u);
}

TEST(SchemeIdeal, TorusInvariant) {
  Rng rng(10);
  std::vector<CoxPoint<Rational>> pts, scaled;
  for (int i = 0; i < 5; ++i) {
    auto p = random_point(rng);
    pts.push_back(p);
    const Rational l(uniform_int(rng, 1, 9), 7), m(-uniform_int(rng, 1, 9), 5);
    scaled.push_back({p[0] * l, p[1] * l * m, p[2] * m, p[3] * m});
  }
  const auto a = scheme_ideal_component(make_scheme(F, pts), {2, 3});
  const auto b = scheme_ideal_component(make_scheme(F, scaled), {2, 3});
  EXPECT_EQ(a.size(), b.size());
  EXPECT_TRUE(span_contains(a, b, 9));
}

TEST(Scheme, RejectsInvalid) {
  EXPECT_THROW(make_scheme(P, Pts{{1, 0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(make_scheme(P, Pts{{1, 2, 1, 1}, {2, 4, 3, 3}}), std::invalid_argument);
  EXPECT_THROW(make_scheme(F, Pts{{1, 2, 1, 1}, {2, 8, 2, 2}}), std::invalid_argument);
}

TEST(IsApolar, TrivialExamples) {
  ExactForm f(P, Side::S, {2, 2});
  f.add_term({2, 0, 2, 0}, 1);
  f.add_term({0, 2, 0, 2}, 1);
  EXPECT_TRUE(is_apolar(make_scheme(P, Pts{{1, 0, 1, 0}, {0, 1, 0, 1}}), f).apolar);
  ExactForm g(P, Side::S, {2, 2});
  g.add_term({2, 0, 2, 0}, 1);
  EXPECT_FALSE(is_apolar(make_scheme(P, Pts{{0, 1, 0, 1}}), g).apolar);
  const auto v = is_apolar(to_float(make_scheme(P, Pts{{0, 1, 0, 1}})), to_float(g), 1e-9);
  EXPECT_FALSE(v.apolar);
  EXPECT_TRUE(v.tests_agree);
}

TEST(IsApolar, PlantedExactAndFloat) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CoxPoint<Rational>> pts;
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) {
      pts.push_back(random_point(rng));
      c.emplace_back(uniform_int(rng, 1, 9));
    }
    const auto f = planted(P, {2, 2}, pts, c);
    const auto s = make_scheme(P, pts);
    EXPECT_TRUE(is_apolar(s, f).apolar);
    const auto v = is_apolar(to_float(s), to_float(f), 1e-9);
    EXPECT_TRUE(v.apolar);
    EXPECT_LT(v.span_residual, 1e-12);
    const auto lem = apolarity_lemma_check(s, f);
    EXPECT_TRUE(lem.ideal_containment);
    EXPECT_TRUE(lem.degree_a_containment);
  }
}

TEST(ApolarityLemma, RandomNonApolar) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_form(P, Side::S, {2, 2}, static_cast<std::uint64_t>(trial));
    std::vector<CoxPoint<Rational>> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(random_point(rng));
    const auto r = apolarity_lemma_check(make_scheme(P, pts), f);
    EXPECT_FALSE(r.degree_a_containment);
    EXPECT_TRUE(r.equivalent);
    EXPECT_TRUE(r.first_failure.has_value());
  }
}
