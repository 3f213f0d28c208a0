#include "apolar/secant_rank.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {
const SurfaceRing P = SurfaceRing::p1xp1();
const SurfaceRing F = SurfaceRing::f1();
}  // namespace

TEST(RankFormula, Values) {
  EXPECT_EQ(rank_formula(2, 2), 4);
  EXPECT_EQ(rank_formula(3, 3), 6);
  EXPECT_EQ(rank_formula(2, 4), 6);
  EXPECT_EQ(rank_formula(4, 2), 6);
  EXPECT_EQ(rank_formula(1, 1), 2);
  EXPECT_EQ(rank_formula(1, 2), 2);
  EXPECT_EQ(rank_formula(2, 3), 4);
  EXPECT_THROW(rank_formula(0, 2), std::invalid_argument);
}

TEST(VpsDimension, Values) {
  EXPECT_EQ(vps_dimension(2, 2), 3);
  EXPECT_EQ(vps_dimension(3, 3), 2);
  EXPECT_EQ(vps_dimension(1, 2), 0);
  EXPECT_EQ(vps_dimension_from_rank(2, 1, 2), 0);
  for (int a = 1; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      EXPECT_EQ(vps_dimension_from_rank(rank_formula(a, b), a, b), vps_dimension(a, b)) << a << "," << b;
}

TEST(Terracini, KnownValues) {
  EXPECT_EQ(terracini_dimension(P, {2, 2}, 3, 1), 8u);
  EXPECT_EQ(terracini_dimension(P, {2, 2}, 4, 1), 9u);
  EXPECT_EQ(terracini_dimension(P, {3, 3}, 5, 1), 15u);
  EXPECT_EQ(terracini_dimension(P, {3, 3}, 6, 1), 16u);
  EXPECT_EQ(terracini_dimension(F, {3, 6}, 7, 1), 21u);
  EXPECT_EQ(terracini_dimension(F, {3, 6}, 8, 1), 22u);
}

TEST(Terracini, PerPointBlockHasRankThree) {
  for (auto ring : {P, F}) {
    const auto pts = random_surface_points(ring, 5, 3);
    for (const auto& p : pts) EXPECT_EQ(rank_exact(terracini_matrix(ring, {3, 4}, {p})), 3u);
  }
}

TEST(Terracini, MonotoneAndBounded) {
  const DegreeClass a{3, 4};
  std::size_t prev = 0;
  for (int k = 1; k <= 8; ++k) {
    const auto d = terracini_dimension(P, a, k, 5);
    EXPECT_GE(d, prev);
    EXPECT_LE(d, std::min<std::size_t>(4 * static_cast<std::size_t>(k), dim(P, a)));
    prev = d;
  }
}

TEST(CertifyRank, Examples) {
  const auto c22 = certify_rank(P, {2, 2}, {1, 2});
  EXPECT_EQ(c22.verified_rank, 4);
  EXPECT_EQ(c22.defective_ks, std::vector<int>{3});
  EXPECT_TRUE(c22.agrees);
  EXPECT_EQ(certify_rank(P, {1, 1}, {1}).verified_rank, 2);
  const auto c33 = certify_rank(P, {3, 3}, {1, 2});
  EXPECT_EQ(c33.verified_rank, 6);
  EXPECT_TRUE(c33.defective_ks.empty());
  const auto cf = certify_rank(F, {3, 6}, {1});
  EXPECT_FALSE(cf.formula_rank.has_value());
  EXPECT_EQ(cf.verified_rank, 8);
}

TEST(CertifyRank, SerialMatchesParallel) {
  const auto a = certify_rank(P, {2, 4}, {1, 2, 3}, Schedule::Serial);
  const auto b = certify_rank(P, {2, 4}, {1, 2, 3}, Schedule::Parallel);
  EXPECT_EQ(a.terracini_dims, b.terracini_dims);
  EXPECT_EQ(a.verified_rank, 6);
  EXPECT_EQ(a.defective_ks, b.defective_ks);
}
