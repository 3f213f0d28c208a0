#pragma once

// Catalecticant maps, orthogonal components I_{f,B}, ideals of finite point
// sets in a fixed degree, and the two equivalent apolarity tests.
//
// Coordinates: a form f in S_A is handled through its values on the
// T-monomials (see functional_values). The catalecticant of f in degree B
// has rows indexed by the T-monomials of A-B (the dual basis of S_{A-B}) and
// columns by the T-monomials of B; its entry is the value of f on the
// product monomial. With these labels the matrix in degree B is exactly the
// transpose of the matrix in degree A-B.

#include "apolar/exact.hpp"
#include "apolar/multigraded.hpp"
#include "apolar/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apolar {

struct Catalecticant {
  DegreeClass degree;                 // B
  DegreeClass target;                 // A - B
  std::vector<Exponent> row_labels;   // T-monomials of A-B
  std::vector<Exponent> col_labels;   // T-monomials of B
  RationalMatrix matrix;
};

Catalecticant catalecticant(const ExactForm& f, DegreeClass b);
ComplexMatrix catalecticant_matrix(const FloatForm& f, DegreeClass b);

/// Basis of I_{f,B} as coefficient vectors over monomials(ring, B): the
/// catalecticant kernel when T_{A-B} != 0, all of T_B otherwise.
std::vector<RationalVector> orthogonal_component(const ExactForm& f, DegreeClass b);
std::vector<ExactForm> orthogonal_component_forms(const ExactForm& f, DegreeClass b);

/// Coefficient vectors of T_{C-B} * span(basis) inside T_C.
std::vector<RationalVector> multiply_span(const SurfaceRing& ring, DegreeClass c_minus_b,
                                          DegreeClass b, const std::vector<RationalVector>& basis);

struct GenerationEntry {
  DegreeClass degree;
  std::size_t dim_orthogonal = 0;   // dim I_{f,C}
  std::size_t dim_generated = 0;    // dim of sum_B T_{C-B} I_{f,B}
  bool is_generator_degree = false;
  bool ok = false;
};

struct GenerationReport {
  std::vector<GenerationEntry> entries;
  bool all_ok = true;
  const GenerationEntry* find(DegreeClass d) const;
};

/// For every effective C in the box [0, a+1] x [0, b+1] checks that the
/// given generator degrees produce I_{f,C}. A generator degree C counts as
/// produced by itself.
GenerationReport generation_check(const ExactForm& f, const std::vector<DegreeClass>& generators);

// ---------------------------------------------------------------------------
// point schemes

template <class Scalar>
struct PointScheme {
  SurfaceRing ring = SurfaceRing::p1xp1();
  std::vector<CoxPoint<Scalar>> points;
  std::size_t size() const { return points.size(); }
};

using ExactScheme = PointScheme<Rational>;
using FloatScheme = PointScheme<Complex>;

/// Validates the scheme: no point in the irrelevant locus, points pairwise
/// distinct as surface points (exactly, or above `tol` in chordal distance).
ExactScheme make_scheme(const SurfaceRing& ring, std::vector<CoxPoint<Rational>> points);
FloatScheme make_scheme(const SurfaceRing& ring, std::vector<CoxPoint<Complex>> points,
                        double tol = 1e-10);

FloatScheme to_float(const ExactScheme& s);

RationalMatrix evaluation_matrix(const ExactScheme& s, DegreeClass b);
ComplexMatrix evaluation_matrix(const FloatScheme& s, DegreeClass b);

std::vector<RationalVector> scheme_ideal_component(const ExactScheme& s, DegreeClass b);
/// Orthonormal columns spanning I_{Gamma,B}.
ComplexMatrix scheme_ideal_component(const FloatScheme& s, DegreeClass b,
                                     double tau = kDefaultRankTol);

struct ApolarityVerdict {
  bool apolar = false;
  bool ideal_test = false;      // every g in I_{Gamma,A} kills f
  bool span_test = false;       // f lies in the span of nu_A(Gamma)
  double ideal_residual = 0.0;  // norm of (g_j(f))_j over an orthonormal kernel basis, relative
  double span_residual = 0.0;   // least-squares residual of f in span nu_A(Gamma), relative
  bool tests_agree = true;
};

/// Exact apolarity. Throws std::logic_error if the two tests disagree.
ApolarityVerdict is_apolar(const ExactScheme& s, const ExactForm& f);
/// Floating apolarity at relative tolerance tol. Throws std::logic_error if
/// the verdicts differ and the two residuals differ by more than tol.
ApolarityVerdict is_apolar(const FloatScheme& s, const FloatForm& f, double tol,
                           double rank_tau = kDefaultRankTol);

/// Same, with f given by its functional values in degree A.
ApolarityVerdict is_apolar_values(const FloatScheme& s, DegreeClass a,
                                  const std::vector<Complex>& values, double tol,
                                  double rank_tau = kDefaultRankTol);

struct ApolarityLemmaResult {
  bool ideal_containment = false;           // I_{Gamma,B} in I_{f,B} for every effective B <= A
  bool degree_a_containment = false;        // I_{Gamma,A} in H_f
  bool equivalent = false;
  std::optional<DegreeClass> first_failure; // smallest B (lex) where containment fails
};

ApolarityLemmaResult apolarity_lemma_check(const ExactScheme& s, const ExactForm& f);

/// Effective B with A-B effective, in lex order.
std::vector<DegreeClass> degrees_below(const SurfaceRing& ring, DegreeClass a);

}  // namespace apolar
