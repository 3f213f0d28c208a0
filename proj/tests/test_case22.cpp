#include "apolar/case22.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

const SurfaceRing P = SurfaceRing::p1xp1();

ExactForm quadric_in_x(Rng& rng, int y0, int y1) {
  ExactForm g(P, Side::S, {2, y0 + y1});
  for (int k = 0; k <= 2; ++k) g.add_term({2 - k, k, y0, y1}, Rational(uniform_int(rng, -9, 9)));
  return g;
}

}  // namespace

TEST(Case22, ContextDimensions) {
  const auto [f, rejected] = general_form_22(1);
  const auto ctx = build_context(f);
  EXPECT_EQ(ctx.basis21.size(), 4u);
  EXPECT_EQ(ctx.basis12.size(), 4u);
  EXPECT_LE(rejected, 1);
}

TEST(Case22, SplitCheckGeneral) {
  const auto [f, rejected] = general_form_22(2);
  const auto split = check_partials_not_split(f);
  EXPECT_TRUE(split.ok());
  EXPECT_EQ(split.gcd_21.size(), 1u);
}

TEST(Case22, SplitCheckPlanted) {
  // y0^2 Q + y0 y1 q + y1^2 q: d/dy1 - 2 d/dy0 is divisible by y0
  Rng rng(7);
  const auto q = quadric_in_x(rng, 0, 0);
  const auto Q = quadric_in_x(rng, 0, 0);
  auto lift = [&](const ExactForm& g, int a, int b) {
    ExactForm out(P, Side::S, {2, 2});
    for (const auto& [e, c] : g.terms()) out.add_term({e[0], e[1], a, b}, c);
    return out;
  };
  const ExactForm f = lift(Q, 2, 0) + lift(q, 1, 1) + lift(q, 0, 2);
  const auto split = check_partials_not_split(f);
  EXPECT_FALSE(split.no_split_21);
  EXPECT_GT(split.gcd_21.size(), 1u);
  EXPECT_FALSE(split.ok());
}

TEST(Case22, ApolarSchemeFromCurve) {
  const auto ctx = build_context(general_form_22(3).first);
  ExactForm g = ctx.basis21[0] + ctx.basis21[1].scaled(Rational(3)) - ctx.basis21[3];
  const auto gamma = generate_apolar_22(ctx, g, kDefaultPencilParameter);
  EXPECT_EQ(gamma.scheme.size(), 4u);
  EXPECT_LT(gamma.apolarity_residual, 1e-9);
  EXPECT_EQ(gamma.image_rank, 2u);
  // independent check: the values lie in the span of the point evaluations
  const auto v = is_apolar(gamma.scheme, to_float(ctx.f), 1e-8);
  EXPECT_TRUE(v.apolar);
}

TEST(Case22, PlueckerRelation) {
  const auto ctx = build_context(general_form_22(4).first);
  const auto gamma = generate_apolar_22(ctx, ctx.basis21[2] - ctx.basis21[0], {Complex(0.3, 1.0), Complex(1.0, -0.2)});
  const auto pl = pluecker_vector(ctx, gamma.scheme);
  EXPECT_LT(pl.relation_residual, 1e-10);
  EXPECT_LT(pl.containment_residual, 1e-9);
  double n = 0;
  for (const auto& z : pl.p) n += std::norm(z);
  EXPECT_NEAR(n, 1.0, 1e-12);
}

TEST(Case22, HyperplaneRankFive) {
  const auto ctx = build_context(general_form_22(5).first);
  const auto rep = hyperplane_section_check(ctx, 12, 11);
  EXPECT_EQ(rep.samples, 12u);
  EXPECT_EQ(rep.numeric_rank, 5u);
  EXPECT_LT(rep.gap, 1e-6);
  EXPECT_LT(rep.max_relation_residual, 1e-10);
  EXPECT_TRUE(rep.all_collinear);
  for (const auto& p : rep.vectors) {
    Complex s = 0;
    for (std::size_t k = 0; k < 6; ++k) s += rep.normal[k] * p[k];
    EXPECT_LT(std::abs(s), 1e-8);
  }
}

TEST(Case22, HyperplaneSerialMatchesParallel) {
  const auto ctx = build_context(general_form_22(6).first);
  const auto a = hyperplane_section_check(ctx, 8, 3, Schedule::Serial);
  const auto b = hyperplane_section_check(ctx, 8, 3, Schedule::Parallel);
  ASSERT_EQ(a.vectors.size(), b.vectors.size());
  for (std::size_t i = 0; i < a.vectors.size(); ++i) EXPECT_EQ(a.vectors[i], b.vectors[i]);
}

TEST(Case22, QuarticImage) {
  const auto ctx = build_context(general_form_22(8).first);
  const auto q = implicitize_quartic(ctx);
  EXPECT_EQ(q.rows_quartic, 45u);
  EXPECT_EQ(q.cols_quartic, 35u);
  EXPECT_EQ(q.kernel_dim_quartic, 1u);
  EXPECT_EQ(q.kernel_dim_cubic, 0u);
  EXPECT_EQ(q.kernel_dim_quadric, 0u);
  // the quartic vanishes on image points
  Rng rng(1);
  const auto mons = p3_monomials(4);
  for (int t = 0; t < 5; ++t) {
    CoxPoint<Complex> p{complex_normal(rng), complex_normal(rng), complex_normal(rng), complex_normal(rng)};
    std::array<Complex, 4> x;
    for (std::size_t i = 0; i < 4; ++i) x[i] = evaluate(to_float(ctx.basis21[i]), p);
    Complex v = 0;
    double scale = 0;
    for (std::size_t k = 0; k < mons.size(); ++k) {
      v += q.quartic[k].get_d() * monomial_value(mons[k], x);
      scale += std::abs(q.quartic[k].get_d() * monomial_value(mons[k], x));
    }
    EXPECT_LT(std::abs(v), 1e-10 * scale);
  }
}

TEST(Case22, DoubleCurve) {
  const auto ctx = build_context(general_form_22(9).first);
  const auto q = implicitize_quartic(ctx);
  const auto rep = double_curve_probe(ctx, q, 12, 5);
  EXPECT_GE(rep.points.size(), 12u);
  EXPECT_EQ(rep.quadric_dim, 3u);
  EXPECT_LE(rep.quadric_dim_control, 2u);
  EXPECT_LT(rep.max_gradient, 1e-6);
}
