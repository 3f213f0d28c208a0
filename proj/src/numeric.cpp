#include "apolar/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apolar {

void require_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::domain_error("complex matrix has a non-finite entry");
  }
}

std::vector<double> svd_values(const ComplexMatrix& m) {
  if (m.size() == 0) return {};
  require_finite(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

std::size_t numeric_rank(const ComplexMatrix& m, double tau) {
  if (tau <= 0) throw std::invalid_argument("numeric_rank: tau must be positive");
  const auto s = svd_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](double v) { return v > tau * s.front(); }));
}

ComplexMatrix numeric_kernel(const ComplexMatrix& m, double tau) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return ComplexMatrix::Identity(n, n);
  require_finite(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  if (s.size() > 0 && s(0) > 0.0)
    while (rank < s.size() && s(rank) > tau * s(0)) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

LeastSquaresResult least_squares(const ComplexMatrix& m, const ComplexVector& b) {
  if (m.rows() < 1) throw std::invalid_argument("least_squares: no rows");
  if (b.size() != m.rows()) throw std::invalid_argument("least_squares: rhs size mismatch");
  require_finite(m);
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(m);
  LeastSquaresResult out;
  out.x = cod.solve(b);
  out.residual_norm = (m * out.x - b).norm();
  return out;
}

Complex poly_eval(const std::vector<Complex>& coeffs, Complex s) {
  Complex acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * s + coeffs[i];
  return acc;
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

namespace {

Complex poly_derivative_eval(const std::vector<Complex>& c, Complex s) {
  Complex acc = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * s + static_cast<double>(i) * c[i];
  return acc;
}

}  // namespace

UnivariateRoots roots_univariate(const std::vector<Complex>& coeffs, double zero_tol) {
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw std::invalid_argument("roots_univariate: zero polynomial");

  UnivariateRoots out;
  std::size_t top = coeffs.size() - 1;
  while (std::abs(coeffs[top]) <= zero_tol * scale) {
    --top;
    ++out.at_infinity;
  }
  std::size_t low = 0;
  while (coeffs[low] == Complex(0.0)) {
    ++low;
    out.roots.emplace_back(0.0);
  }
  const std::vector<Complex> p(coeffs.begin() + static_cast<std::ptrdiff_t>(low),
                               coeffs.begin() + static_cast<std::ptrdiff_t>(top) + 1);
  const std::size_t n = p.size() - 1;
  if (n == 0) return out;

  ComplexMatrix companion = ComplexMatrix::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<ComplexMatrix> es(companion, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("roots_univariate: eigen solver failed");

  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    Complex z = es.eigenvalues()(i);
    // Newton polish, kept only while it decreases |p|.
    for (int it = 0; it < 4; ++it) {
      const Complex v = poly_eval(p, z);
      const Complex d = poly_derivative_eval(p, z);
      if (d == Complex(0.0)) break;
      const Complex cand = z - v / d;
      if (std::abs(poly_eval(p, cand)) < std::abs(v)) z = cand;
      else break;
    }
    out.roots.push_back(z);
  }
  return out;
}

}  // namespace apolar
