#include "apolar/binary_sylvester.hpp"
#include "apolar/seed.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace apolar;

namespace {

BinaryDualForm random_dual(Rng& rng, int d) {
  std::vector<Complex> v;
  for (int i = 0; i <= d; ++i) v.emplace_back(static_cast<double>(uniform_int(rng, -99, 99)), 0.0);
  return BinaryDualForm::from_values(v);
}

std::vector<BinaryPoint> random_points(Rng& rng, std::size_t n) {
  std::vector<BinaryPoint> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back({complex_normal(rng), complex_normal(rng)});
  return p;
}

}  // namespace

TEST(BinaryCatalecticant, RankOnePower) {
  std::vector<Complex> v(6, 0.0);
  v[0] = 120.0;
  const auto f = BinaryDualForm::from_values(v);
  EXPECT_EQ(numeric_rank(binary_catalecticant(f, 2)), 1u);
  const auto r = reconstruct({{1.0, 0.0}}, {1.0}, 5);
  EXPECT_LT(relative_error(r, f), 1e-15);
}

TEST(BinaryCatalecticant, GenericShapes) {
  Rng rng(1);
  const auto q = random_dual(rng, 5);
  const auto h = binary_catalecticant(q, 3);
  EXPECT_EQ(h.rows(), 3);
  EXPECT_EQ(h.cols(), 4);
  EXPECT_EQ(numeric_rank(h), 3u);
  const auto s = random_dual(rng, 6);
  EXPECT_EQ(numeric_kernel(binary_catalecticant(s, 4)).cols(), 2);
}

TEST(BinaryCatalecticant, TransposeDuality) {
  Rng rng(2);
  for (int d = 1; d <= 9; ++d) {
    const auto f = random_dual(rng, d);
    for (int k = 0; k <= d; ++k)
      EXPECT_EQ(binary_catalecticant(f, k), binary_catalecticant(f, d - k).transpose());
  }
}

TEST(BinaryCatalecticant, PlantedRank) {
  Rng rng(3);
  for (int d = 2; d <= 10; ++d)
    for (std::size_t r = 1; r <= 5; ++r) {
      const auto pts = random_points(rng, r);
      std::vector<Complex> c;
      for (std::size_t i = 0; i < r; ++i) c.push_back(complex_normal(rng));
      const auto f = reconstruct(pts, c, d);
      for (int k = 0; k <= d; ++k) {
        const std::size_t expected = std::min<std::size_t>({r, static_cast<std::size_t>(k + 1),
                                                            static_cast<std::size_t>(d - k + 1)});
        EXPECT_EQ(numeric_rank(binary_catalecticant(f, k), 1e-9), expected) << "d=" << d << " r=" << r << " k=" << k;
      }
    }
}

TEST(Sylvester, PlantedRankTwo) {
  const auto f = reconstruct({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0}, 5);
  const auto dec = sylvester_decompose(f);
  ASSERT_EQ(dec.points.size(), 2u);
  EXPECT_LT(point_set_distance(dec.points, {{1.0, 0.0}, {0.0, 1.0}}), 1e-12);
  EXPECT_LT(dec.residual, 1e-12);
}

TEST(Sylvester, OddDegreeUnique) {
  Rng rng(4);
  for (int d : {5, 7, 9}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_dual(rng, d);
      const auto dec = sylvester_decompose(f);
      EXPECT_EQ(dec.points.size(), static_cast<std::size_t>((d + 1) / 2));
      EXPECT_LT(dec.residual, 1e-9);
      EXPECT_LT(relative_error(reconstruct(dec.points, dec.coefficients, d), f), 1e-9);
      // a second run on the reconstructed form returns the same point set
      const auto again = sylvester_decompose(reconstruct(dec.points, dec.coefficients, d), BinaryPoint{1.0, 2.0});
      EXPECT_LT(point_set_distance(dec.points, again.points), 1e-8);
    }
  }
}

TEST(Sylvester, EvenDegreePencil) {
  Rng rng(5);
  for (int d : {6, 8}) {
    const auto f = random_dual(rng, d);
    const auto a = sylvester_decompose(f, BinaryPoint{1.0, 0.0});
    const auto b = sylvester_decompose(f, BinaryPoint{0.3, 1.0});
    EXPECT_EQ(a.points.size(), static_cast<std::size_t>(d / 2 + 1));
    EXPECT_EQ(a.kernel_dim, 2u);
    EXPECT_LT(a.residual, 1e-9);
    EXPECT_LT(b.residual, 1e-9);
    EXPECT_GT(point_set_distance(a.points, b.points), 1e-3);
  }
}

TEST(Sylvester, DegeneratePencilMember) {
  // Sextic whose degree-4 annihilator pencil contains s0^2 s1^2 and a random
  // form: F spans the common kernel of the two transposed catalecticants.
  Rng rng(6);
  std::vector<Complex> g1{0.0, 0.0, 1.0, 0.0, 0.0};
  std::vector<Complex> g2;
  for (int i = 0; i < 5; ++i) g2.push_back(complex_normal(rng));
  ComplexMatrix sys = ComplexMatrix::Zero(6, 7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) {
      sys(i, i + j) += g1[static_cast<std::size_t>(j)];
      sys(3 + i, i + j) += g2[static_cast<std::size_t>(j)];
    }
  const ComplexMatrix fv = numeric_kernel(sys);
  ASSERT_EQ(fv.cols(), 1);
  const auto f = BinaryDualForm::from_values(std::vector<Complex>(fv.data(), fv.data() + 7));
  const ComplexMatrix ker = numeric_kernel(binary_catalecticant(f, 4));
  ASSERT_EQ(ker.cols(), 2);
  ComplexVector target(5);
  for (int j = 0; j < 5; ++j) target(j) = g1[static_cast<std::size_t>(j)];
  const auto lm = least_squares(ker, target);
  ASSERT_LT(lm.residual_norm, 1e-10);
  EXPECT_THROW(sylvester_decompose(f, BinaryPoint{lm.x(0), lm.x(1)}), DegeneracyError);
  try {
    sylvester_decompose(f, BinaryPoint{lm.x(0), lm.x(1)});
  } catch (const DegeneracyError& e) {
    EXPECT_EQ(e.gcd().size(), 3u);  // gcd with g' is s0 s1
  }
  EXPECT_NO_THROW(sylvester_decompose(f, BinaryPoint{1.0, 0.7}));
}

TEST(Reconstruct, PermutationInvariant) {
  Rng rng(7);
  auto pts = random_points(rng, 4);
  std::vector<Complex> c{1.0, 2.0, -1.0, 0.5};
  const auto a = reconstruct(pts, c, 7);
  std::reverse(pts.begin(), pts.end());
  std::reverse(c.begin(), c.end());
  EXPECT_LT(relative_error(reconstruct(pts, c, 7), a), 1e-14);
}

TEST(Normalize, LargestCoordinateIsOne) {
  const auto p = normalize_binary({Complex(2.0, 0.0), Complex(0.0, 4.0)});
  EXPECT_EQ(p[1], Complex(1.0));
  EXPECT_NEAR(std::abs(p[0] - Complex(0.0, -0.5)), 0.0, 1e-15);
  EXPECT_THROW(normalize_binary({0.0, 0.0}), std::domain_error);
}
