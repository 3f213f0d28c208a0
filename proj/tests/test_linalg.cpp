#include "apolar/exact.hpp"
#include "apolar/numeric.hpp"
#include "apolar/seed.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace apolar;

namespace {

RationalMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo = -9, long hi = 9) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(uniform_int(rng, lo, hi), uniform_int(rng, 1, 4));
  return m;
}

// product of an r x k and k x c random matrix has rank k generically
RationalMatrix planted_rank(Rng& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k) * random_matrix(rng, k, c);
}

ComplexMatrix to_complex(const RationalMatrix& m) {
  ComplexMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

}  // namespace

TEST(ExactKernel, SmallExample) {
  const auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto k = kernel_exact(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
}

TEST(ExactKernel, PrimitiveNormalization) {
  const auto m = RationalMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}});
  const auto k = kernel_exact(m);
  ASSERT_EQ(k.size(), 1u);
  // 1/2 x + 1/3 y = 0  ->  (-2, 3)
  EXPECT_EQ(k[0][0], -2);
  EXPECT_EQ(k[0][1], 3);
}

TEST(ExactKernel, RankNullity) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    const std::size_t c = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(std::min(r, c))));
    const auto m = planted_rank(rng, r, c, k);
    const auto rank = rank_exact(m);
    const auto ker = kernel_exact(m);
    EXPECT_EQ(rank + ker.size(), c);
    EXPECT_LE(rank, k);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(span_rank(ker, c), ker.size());
    EXPECT_EQ(rank_exact(m.transpose()), rank);
  }
}

TEST(ExactKernel, AgreesWithNumericRank) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, 5));
    const auto m = planted_rank(rng, 6, 7, k);
    EXPECT_EQ(rank_exact(m), numeric_rank(to_complex(m)));
  }
}

TEST(ExactSolve, ConsistentAndInconsistent) {
  const auto m = RationalMatrix::from_rows({{1, 1}, {1, -1}, {2, 0}});
  auto x = solve_exact(m, {3, 1, 4});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_exact(m, {3, 1, 5}).has_value());
}

TEST(ExactSpan, Containment) {
  const RationalVector a{1, 0, 1};
  const RationalVector b{0, 1, 1};
  const RationalVector s{2, 3, 5};
  const RationalVector t{0, 0, 1};
  EXPECT_TRUE(span_contains({a, b}, {s}, 3));
  EXPECT_FALSE(span_contains({a, b}, {t}, 3));
}

TEST(NumericRank, ThresholdIsRelative) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 1e6;
  m(1, 1) = 1.0;
  m(2, 2) = 1e-5;
  EXPECT_EQ(numeric_rank(m, 1e-8), 2u);
  EXPECT_EQ(numeric_rank(m, 1e-12), 3u);
  EXPECT_EQ(numeric_rank(ComplexMatrix::Zero(2, 2)), 0u);
}

TEST(NumericRank, RejectsNonFinite) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = std::nan("");
  EXPECT_THROW(numeric_rank(m), std::domain_error);
}

TEST(NumericKernel, Orthonormal) {
  Rng rng(3);
  const auto m = to_complex(planted_rank(rng, 4, 7, 3));
  const ComplexMatrix k = numeric_kernel(m);
  ASSERT_EQ(k.cols(), 4);
  EXPECT_LT((m * k).norm(), 1e-9 * m.norm());
  EXPECT_LT((k.adjoint() * k - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(LeastSquares, ExactFit) {
  ComplexMatrix m(3, 2);
  m << 1, 0, 0, 1, 1, 1;
  ComplexVector b(3);
  b << 1, 2, 3;
  const auto r = least_squares(m, b);
  EXPECT_LT(r.residual_norm, 1e-14);
  EXPECT_NEAR(std::abs(r.x(0) - Complex(1)), 0.0, 1e-14);
}

TEST(Roots, RecoverPlantedRoots) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> roots;
    for (int i = 0; i < 6; ++i) roots.push_back(complex_normal(rng));
    const auto found = roots_univariate(poly_from_roots(roots));
    ASSERT_EQ(found.roots.size(), roots.size());
    for (const auto& r : roots) {
      double best = 1e300;
      for (const auto& z : found.roots) best = std::min(best, std::abs(z - r));
      EXPECT_LT(best, 1e-9);
    }
  }
}

TEST(Roots, InfinityAndZero) {
  // s^2 (s - 2) with a vanishing top coefficient appended
  const auto r = roots_univariate({0.0, 0.0, -2.0, 1.0, 0.0});
  EXPECT_EQ(r.at_infinity, 1u);
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_EQ(r.roots[0], Complex(0.0));
  EXPECT_EQ(r.roots[1], Complex(0.0));
  EXPECT_NEAR(std::abs(r.roots[2] - Complex(2.0)), 0.0, 1e-14);
  EXPECT_THROW(roots_univariate({0.0, 0.0}), std::invalid_argument);
}
