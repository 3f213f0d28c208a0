#pragma once

// Cubic forms on the scroll F1 (class 3E+6F): the pencil K = I_{f,2E+3F},
// its eight base points, apolar schemes of length 8 lying on curves of K and
// the residual point of such a scheme on its curve.

#include "apolar/apolarity.hpp"
#include "apolar/decompose.hpp"
#include "apolar/errors.hpp"
#include "apolar/parallel.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace apolar {

struct F1Context {
  ExactForm f;
  std::array<ExactForm, 2> pencil;              // basis g1, g2 of I_{f,2E+3F}
  std::map<std::string, std::size_t> ideal_dims;  // "2E+3F", "2E+2F", "E+3F"
  std::map<std::string, std::size_t> t_dims;      // "3E+3F", "2E+3F", "E+3F", "E+2F", "3E+6F"
  std::size_t catalecticant_rows = 0;           // 7
  std::size_t catalecticant_cols = 0;           // 9
};

/// Throws GenericityError naming the failed dimension.
F1Context build_f1_context(const ExactForm& f);

/// Seeded general 3E+6F form: redraws until the context builds; returns the
/// form and the number of rejections.
std::pair<ExactForm, int> general_form_f1(std::uint64_t seed, int max_attempts = 8);

struct IntersectionPoint {
  CoxPoint<Complex> point;   // normalized to its best chart
  int multiplicity = 1;
};

struct IntersectionResult {
  std::vector<IntersectionPoint> points;
  std::size_t count = 0;          // with multiplicity
  std::size_t main_chart = 0;     // found through the resultant
  std::size_t on_e = 0;           // t0 = 0
  std::size_t on_u0 = 0;          // u0 = 0, t0 != 0
  double max_residual = 0.0;      // max of |h_i(p)| / |h_i| at unit evaluation vectors
};

/// Common zeros of two forms on F1: resultant in the chart t0 = u0 = 1 plus
/// the boundary curves t0 = 0 and u0 = 0. Throws GenericityError when the
/// curves share a component.
IntersectionResult intersect_f1(const FloatForm& h1, const FloatForm& h2);

/// |h(p)| / (|h| |nu(p)|), scale free.
double normalized_value(const FloatForm& h, const CoxPoint<Complex>& p);

struct BasePointSet {
  IntersectionResult intersection;
  bool distinct = false;
  bool off_e = false;            // no point with t0 = 0
  FloatScheme scheme;
  ApolarityVerdict verdict;
  std::size_t stack_rank = 0;    // rank of nu(Gamma0) stacked with f, in degree 3E+6F
};

/// Throws std::logic_error when the count is not 8.
BasePointSet pencil_basepoints(const F1Context& ctx);

struct PencilMembership {
  std::array<Complex, 2> coordinates{};  // (lambda : mu), unit norm
  double residual = 0.0;                 // sigma_min / sigma_max of the 8x2 system
  double sigma_max = 0.0;
  std::size_t rank = 0;                  // singular values above 1e-8 (rows are scale free)
};

PencilMembership pencil_membership(const F1Context& ctx, const FloatScheme& gamma);

struct IrreducibilityCheck {
  double e_factor = 0.0;        // residual of the best t0 factor ansatz
  double f_factor = 0.0;        // ... linear form in u
  double ef_factor = 0.0;       // ... section of E+F
  bool irreducible = false;     // all residuals above 1e-8
};

/// Factor ansatz residuals for a curve of class 2E+3F.
IrreducibilityCheck check_irreducible(const FloatForm& c);

struct ResidualPoint {
  CoxPoint<Complex> point;
  double on_curve = 0.0;           // normalized value of the curve of K through Gamma
  std::size_t n_dim = 0;           // dim N_Gamma = dim I_{Gamma,3E+3F}
  std::size_t intersection_count = 0;   // C cap C', with multiplicity (9)
  std::optional<std::size_t> base_count;  // base locus of N_Gamma (9) when finite
  double base_agreement = 0.0;     // distance between the extra base point and p
};

/// Residual point of Gamma on the curve C = lambda g1 + mu g2. Throws
/// SampleRejected when dim N_Gamma != 2 or the residual is not unique.
ResidualPoint residual_point(const F1Context& ctx, const FloatScheme& gamma,
                             const std::array<Complex, 2>& pencil_coordinates);

/// The point E cap C for C = lambda g1 + mu g2: on t0 = 0 the curve restricts
/// to t1^2 (a u0 + b u1).
CoxPoint<Complex> e_intersection(const F1Context& ctx, const std::array<Complex, 2>& pencil_coordinates);

struct F1Sample {
  Decomposition decomposition;
  PencilMembership membership;
  IrreducibilityCheck irreducibility;
  ApolarityVerdict verdict;
  ResidualPoint residual;
};

/// One decomposition of length 8 and the derived checks. Throws
/// SampleRejected when the decomposition search is exhausted.
F1Sample vps_f1_sample(const F1Context& ctx, std::uint64_t seed, DecomposeOptions options = {});

struct F1Batch {
  std::vector<F1Sample> samples;
  std::size_t rejected = 0;
  double min_residual_separation = 0.0;  // min distance between residual points of distinct samples
};

F1Batch vps_f1_samples(const F1Context& ctx, std::size_t n, std::uint64_t seed,
                       Schedule schedule = Schedule::Parallel, int restarts = 64);

}  // namespace apolar
