#pragma once

// Forms of bidegree (2,2) on P1xP1: the maps given by I_{f,(2,1)} and
// I_{f,(1,2)}, the split test on partial derivatives, apolar schemes of
// length 4 obtained by restriction to curves, Pluecker coordinates of the
// pencils I_{Gamma,(2,1)}, the quartic image surface and its double curve.

#include "apolar/apolarity.hpp"
#include "apolar/binary_sylvester.hpp"
#include "apolar/errors.hpp"
#include "apolar/parallel.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace apolar {

struct Case22Context {
  ExactForm f;
  std::vector<ExactForm> basis21;      // I_{f,(2,1)}, 4 forms
  std::vector<ExactForm> basis12;      // I_{f,(1,2)}, 4 forms
  std::array<ExactForm, 2> partials_y; // df/dy0, df/dy1
  std::array<ExactForm, 2> partials_x; // df/dx0, df/dx1
};

/// Throws GenericityError naming the failed dimension.
Case22Context build_context(const ExactForm& f);

struct SplitCheck {
  bool no_split_21 = false;  // no member of <df/dy0, df/dy1> is q(x) l(y)
  bool no_split_12 = false;  // no member of <df/dx0, df/dx1> is l(x) q(y)
  std::vector<Rational> gcd_21;  // gcd of the three minors (ascending in lambda/mu)
  std::vector<Rational> gcd_12;
  bool ok() const { return no_split_21 && no_split_12; }
};

SplitCheck check_partials_not_split(const ExactForm& f);

struct Apolar22 {
  FloatScheme scheme;
  std::vector<Complex> coefficients;
  double system_residual = 0.0;    // consistency of the linear system for F_C
  double apolarity_residual = 0.0;
  std::size_t image_rank = 0;      // rank of the 4 points under the (2,1) map (2 = collinear)
};

/// g in I_{f,(2,1)} (T side). Throws SampleRejected if g0, g1 share a factor or
/// the chosen pencil member is degenerate.
Apolar22 generate_apolar_22(const Case22Context& ctx, const ExactForm& g, const BinaryPoint& pencil);

using PlueckerVector = std::array<Complex, 6>;  // p01 p02 p03 p12 p13 p23

struct PlueckerResult {
  PlueckerVector p{};
  double containment_residual = 0.0;  // I_{Gamma,(2,1)} inside I_{f,(2,1)}
  double relation_residual = 0.0;     // p01 p23 - p02 p13 + p03 p12
  std::array<Complex, 8> coordinates{};  // the two pencil generators in ctx.basis21 coordinates
};

/// Throws SampleRejected unless dim I_{Gamma,(2,1)} = 2.
PlueckerResult pluecker_vector(const Case22Context& ctx, const FloatScheme& gamma);

struct HyperplaneReport {
  std::size_t samples = 0;
  std::size_t rejected = 0;
  std::vector<PlueckerVector> vectors;
  std::vector<double> singular_values;
  std::size_t numeric_rank = 0;   // at threshold 1e-6
  double gap = 0.0;               // sigma_6 / sigma_1
  double max_relation_residual = 0.0;
  double max_containment_residual = 0.0;
  double max_apolarity_residual = 0.0;
  bool all_collinear = true;
  std::array<Complex, 6> normal{};  // common linear form (last right singular vector)
};

HyperplaneReport hyperplane_section_check(const Case22Context& ctx, std::size_t n_samples, std::uint64_t seed,
                                          Schedule schedule = Schedule::Parallel);

struct QuarticReport {
  RationalVector quartic;               // 35 coefficients over degree-4 monomials of P3
  std::size_t kernel_dim_quartic = 0;
  std::size_t kernel_dim_cubic = 0;
  std::size_t kernel_dim_quadric = 0;
  std::size_t rows_quartic = 0;
  std::size_t cols_quartic = 0;
};

/// Implicit equation of the image of the (2,1) map. Throws GenericityError
/// when the quartic kernel is not 1-dimensional.
QuarticReport implicitize_quartic(const Case22Context& ctx);
QuarticReport implicitize_quartic(const std::vector<ExactForm>& maps);

/// Degree-4 monomials of P3 in the order used by QuarticReport::quartic.
std::vector<Exponent> p3_monomials(int degree);

struct DoubleCurveReport {
  std::vector<std::array<Complex, 4>> points;  // image double points, unit norm
  std::size_t planes_used = 0;
  std::size_t quadric_dim = 0;                 // quadrics through the points
  std::size_t quadric_dim_control = 0;         // after adding an ordinary image point
  double max_gradient = 0.0;                   // quartic gradient at the points
  double max_pair_residual = 0.0;
};

/// Samples double points of the image quartic from plane sections. Throws
/// SampleRejected if fewer than n_points are found within the plane budget.
DoubleCurveReport double_curve_probe(const Case22Context& ctx, const QuarticReport& quartic,
                                     std::size_t n_points, std::uint64_t seed, std::size_t max_planes = 12);

/// Seeded general (2,2)-form: random integer forms are drawn until the
/// context builds; returns the form and the number of rejections.
std::pair<ExactForm, int> general_form_22(std::uint64_t seed, int max_attempts = 8);

}  // namespace apolar
