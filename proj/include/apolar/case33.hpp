#pragma once

// Forms of bidegree (3,3) on P1xP1 through cubics in four variables
// z0 = x0 y0, z1 = x0 y1, z2 = x1 y0, z3 = x1 y1: the harmonic lift F of f,
// its five-point decomposition, twisted cubics through six points of P3 and
// length-6 apolar schemes cut on the Segre quadric.

#include "apolar/apolarity.hpp"
#include "apolar/binary_sylvester.hpp"
#include "apolar/decompose.hpp"
#include "apolar/errors.hpp"
#include "apolar/parallel.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace apolar {

using P3Point = std::array<Complex, 4>;

/// z-substitution of a P3 monomial into P1xP1 (same side).
Exponent segre_substitute(const Exponent& z);

/// Applies the z-substitution to a whole P3 form of degree (d,0).
ExactForm segre_substitute(const ExactForm& g);

/// The operator d^2/dz0dz3 - d^2/dz1dz2 as a T-side P3 quadric.
ExactForm segre_operator();

struct CubicLift {
  ExactForm f;
  ExactForm F;                        // S-side P3 cubic
  std::size_t system_rows = 0;        // 16 substitution + 4 harmonicity equations
  std::size_t system_rank = 0;        // 20 for a unique lift
  bool substitution_exact = false;    // F(z(x,y)) == f
  bool harmonic = false;              // Delta(F) == 0
  std::size_t perp2_dim = 0;          // dim F_2^perp
  bool perp2_contains_delta = false;
  std::size_t image_dim = 0;          // dim of the substituted F_2^perp
  std::size_t i22_dim = 0;            // dim I_{f,(2,2)}
  bool image_is_i22 = false;
};

CubicLift harmonic_lift(const ExactForm& f);

struct Pentahedron {
  std::vector<P3Point> points;         // unit norm, phase fixed
  std::vector<Complex> coefficients;   // values of F = sum c_i nu_3(L_i)
  double residual = 0.0;
  int agreeing_starts = 0;
  double max_disagreement = 0.0;       // between the agreeing starts
  int starts_run = 0;
  std::size_t ideal_dim = 0;           // dim I_{Gamma0,2}
  double ideal_in_perp_residual = 0.0; // I_{Gamma0,2} inside F_2^perp
  double min_segre_value = 0.0;        // min |L0 L3 - L1 L2| / |L|^2
};

/// Throws GenericityError on exhaustion (check "pentahedron") or when the
/// successful starts disagree (check "pentahedron uniqueness").
Pentahedron pentahedron(const CubicLift& lift, std::uint64_t seed, Schedule schedule = Schedule::Parallel,
                        int restarts = 64);

/// Distance between unordered point sets of P3 (max over best matches).
double p3_set_distance(const std::vector<P3Point>& a, const std::vector<P3Point>& b);

struct TwistedCubic {
  ComplexMatrix coefficients;              // 4x4, column k multiplies t^k
  std::vector<BinaryPoint> parameters;     // parameter of each input point, homogeneous (t0, t1)
  double max_point_residual = 0.0;         // projective distance of the image of each parameter
  std::size_t rank = 0;

  P3Point at(const BinaryPoint& t) const;
};

/// Unique twisted cubic through six points of P3 in general position. Throws
/// GenericityError naming the failed rank test.
TwistedCubic twisted_cubic_through(const std::vector<P3Point>& points);

/// Quadrics (10 coefficients over p3_monomials(2)) containing a twisted cubic.
ComplexMatrix cubic_quadrics(const TwistedCubic& c);

struct Vps33Sample {
  FloatScheme scheme;                  // 6 points on P1xP1
  std::vector<P3Point> quadric_points; // their Segre images, unit norm
  P3Point planted{};                   // the random Segre point used
  double planted_distance = 0.0;       // distance from planted to the nearest of the six
  double span_residual = 0.0;
  double ideal_residual = 0.0;
  bool apolar = false;
  double max_det = 0.0;                // relative det of the 2x2 arrangements
  TwistedCubic cubic;
};

/// One draw; throws SampleRejected on clustered roots or three coinciding
/// x-projections.
Vps33Sample vps33_sample(const CubicLift& lift, const Pentahedron& pent, std::uint64_t seed);

struct Vps33Batch {
  std::vector<Vps33Sample> samples;
  std::size_t rejected = 0;
};

Vps33Batch vps33_samples(const CubicLift& lift, const Pentahedron& pent, std::size_t n, std::uint64_t seed,
                         Schedule schedule = Schedule::Parallel);

double projective_distance(const P3Point& a, const P3Point& b);
P3Point unit_point(const P3Point& v);

}  // namespace apolar
