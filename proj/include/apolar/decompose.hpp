#pragma once

// Seeded multistart Levenberg-Marquardt search for decompositions
//   w = sum_i c_i nu_A(p_i)
// of a form given by its functional values w (see functional_values). The
// points move in affine charts (two free coordinates per surface point, three
// on P3); the coefficients are re-solved by least squares at every step.

#include "apolar/apolarity.hpp"
#include "apolar/multigraded.hpp"
#include "apolar/numeric.hpp"
#include "apolar/parallel.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace apolar {

struct DecomposeOptions {
  int restarts = 64;
  int max_iterations = 300;
  double tolerance = 1e-10;       // relative residual that counts as success
  double damping = 1e-3;          // initial damping, scales diag(J^H J)
  double damping_up = 10.0;
  double damping_down = 0.1;
  double chart_bound = 4.0;       // switch charts when a free coordinate exceeds this
  double collision_tol = 1e-6;    // reject starts whose points come closer than this
  Schedule schedule = Schedule::Parallel;
  std::size_t batch = 16;         // starts evaluated together on the parallel path
};

struct DecompositionProblem {
  SurfaceRing ring = SurfaceRing::p1xp1();
  DegreeClass degree;
  std::vector<Complex> target;    // functional values of f in degree A
  std::size_t length = 1;         // k
  DecomposeOptions options;

  static DecompositionProblem from_form(const FloatForm& f, std::size_t k, DecomposeOptions opts = {});
  void validate() const;
};

struct Decomposition {
  FloatScheme scheme;
  std::vector<Complex> coefficients;
  double residual = 0.0;          // ||sum c_i nu(p_i) - w|| / ||w||
  int iterations = 0;
  int start_index = -1;
};

/// Residual of a candidate, computed from scratch.
double decomposition_residual(const SurfaceRing& ring, DegreeClass a, const std::vector<Complex>& target,
                              const std::vector<CoxPoint<Complex>>& points,
                              const std::vector<Complex>& coefficients);

struct DecomposeResult {
  std::optional<Decomposition> decomposition;  // lowest-index successful start
  double best_residual = 0.0;                  // over the starts that were run
  int starts_run = 0;                          // index of the success + 1, or restarts
  int collisions = 0;                          // converged starts rejected for close points
  bool success() const { return decomposition.has_value(); }
};

/// Deterministic in (problem, seed); the serial and parallel schedules
/// return the same decomposition.
DecomposeResult gauss_newton_decompose(const DecompositionProblem& problem, std::uint64_t seed);

/// Runs every start and returns all successful decompositions in start order.
std::vector<Decomposition> decompose_all(const DecompositionProblem& problem, std::uint64_t seed,
                                         int max_successes);

struct PolishResult {
  Decomposition decomposition;
  bool improved = false;
  bool diverged = false;
};

/// Further iterations with no stopping tolerance; never increases the residual.
PolishResult polish(const Decomposition& dec, const DecompositionProblem& problem, int iterations = 50);

/// Least-squares coefficients for fixed points.
std::vector<Complex> solve_coefficients(const SurfaceRing& ring, DegreeClass a,
                                        const std::vector<Complex>& target,
                                        const std::vector<CoxPoint<Complex>>& points);

}  // namespace apolar
