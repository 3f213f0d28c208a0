#pragma once

// Double-precision complex linear algebra: singular values, numeric rank and
// kernels, least squares and univariate roots.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace apolar {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultRankTol = 1e-8;

/// Throws std::domain_error if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m);

/// Singular values in descending order.
std::vector<double> svd_values(const ComplexMatrix& m);

/// Count of singular values above tau * sigma_1 (0 for the zero matrix).
std::size_t numeric_rank(const ComplexMatrix& m, double tau = kDefaultRankTol);

/// Orthonormal basis (columns) of the right null space at relative threshold tau.
ComplexMatrix numeric_kernel(const ComplexMatrix& m, double tau = kDefaultRankTol);

struct LeastSquaresResult {
  ComplexVector x;
  double residual_norm = 0.0;
};

/// Minimum-norm minimizer of ||M x - b||_2.
LeastSquaresResult least_squares(const ComplexMatrix& m, const ComplexVector& b);

struct UnivariateRoots {
  std::vector<Complex> roots;     // finite roots, with repetition
  std::size_t at_infinity = 0;    // vanishing top coefficients of the binary form
};

/// Roots of c[0] + c[1] s + ... + c[n] s^n from the eigenvalues of the
/// companion matrix, Newton-polished. Vanishing top coefficients (|c| below
/// zero_tol times the largest) are deflated and counted as roots at
/// infinity; exact zero low coefficients are counted as roots at 0.
/// Throws std::invalid_argument for the zero polynomial.
UnivariateRoots roots_univariate(const std::vector<Complex>& coeffs, double zero_tol = 0.0);

/// Coefficients (ascending) of prod (s - r_i).
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots);

Complex poly_eval(const std::vector<Complex>& coeffs, Complex s);

}  // namespace apolar
