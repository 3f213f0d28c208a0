#pragma once

// Sylvester's algorithm for binary forms.
//
// A binary dual form of degree d is stored by its values on the monomials
// s0^(d-k) s1^k, k = 0..d (index k). The catalecticant in degree k is the
// Hankel matrix H(i, j) = F[i + j] with d-k+1 rows and k+1 columns; a kernel
// vector g is the binary form sum_j g_j s0^(k-j) s1^j that annihilates F.
// The dual of the power (p0 x0 + p1 x1)^d has values d! * p0^(d-k) p1^k.

#include "apolar/exact.hpp"
#include "apolar/numeric.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace apolar {

using BinaryPoint = std::array<Complex, 2>;

struct BinaryDualForm {
  int degree = 0;
  std::vector<Complex> values;

  static BinaryDualForm from_values(std::vector<Complex> values);
  static BinaryDualForm from_values(const std::vector<Rational>& values);
};

/// Raised when the selected kernel form has a repeated root.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, std::vector<Complex> gcd)
      : std::runtime_error(what), gcd_(std::move(gcd)) {}
  /// Ascending coefficients (in s1/s0) of the repeated factor.
  const std::vector<Complex>& gcd() const { return gcd_; }

 private:
  std::vector<Complex> gcd_;
};

ComplexMatrix binary_catalecticant(const BinaryDualForm& f, int k);
RationalMatrix binary_catalecticant(const std::vector<Rational>& values, int k);

struct BinaryDecomposition {
  std::vector<BinaryPoint> points;   // normalized, see normalize_binary
  std::vector<Complex> coefficients; // F = sum c_i dual(l_i^d)
  int k = 0;                         // catalecticant degree that produced the points
  std::size_t kernel_dim = 0;
  std::vector<Complex> kernel_form;  // the annihilating binary form used
  double residual = 0.0;             // relative reconstruction error
};

struct SylvesterOptions {
  double rank_tol = 1e-10;
  double root_separation = 1e-6;
};

/// Default member of a kernel pencil when none is requested.
inline constexpr BinaryPoint kDefaultPencilParameter{Complex(1.0, 0.0), Complex(0.5, 0.25)};

/// Scans k upward until a square-free annihilating form of degree k exists,
/// then recovers its roots and coefficients. When the kernel has dimension
/// >= 2, the member pencil[0] * n0 + pencil[1] * n1 of the first two kernel
/// basis vectors is used. Throws DegeneracyError when that member has a
/// repeated root.
BinaryDecomposition sylvester_decompose(const BinaryDualForm& f,
                                        std::optional<BinaryPoint> pencil = std::nullopt,
                                        const SylvesterOptions& opts = {});

/// sum_i c_i dual(l_i^d).
BinaryDualForm reconstruct(const std::vector<BinaryPoint>& points, const std::vector<Complex>& coeffs,
                           int degree);

/// Representative with the largest-modulus coordinate equal to 1.
BinaryPoint normalize_binary(const BinaryPoint& p);
/// Chordal distance on P^1.
double binary_point_distance(const BinaryPoint& p, const BinaryPoint& q);

/// Largest distance from a point of `a` to its nearest point of `b`, both ways.
double point_set_distance(const std::vector<BinaryPoint>& a, const std::vector<BinaryPoint>& b);

double relative_error(const BinaryDualForm& a, const BinaryDualForm& b);

}  // namespace apolar
