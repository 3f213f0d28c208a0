#pragma once

// Generic ranks of forms on P1xP1, the dimension of the variety of sums of
// powers, and an exact Terracini computation of secant dimensions.

#include "apolar/exact.hpp"
#include "apolar/multigraded.hpp"
#include "apolar/parallel.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace apolar {

/// Generic rank of a bidegree (a,b) form: 2d+2 for (2,2d) and (2d,2),
/// otherwise ceil((a+1)(b+1)/3).
int rank_formula(int a, int b);
/// Dimension of VPS([f], rank) for general f.
int vps_dimension(int a, int b);
/// 3r - 1 - (ab + a + b).
int vps_dimension_from_rank(int r, int a, int b);

/// Rows: the four partial derivatives of nu_A at each point.
RationalMatrix terracini_matrix(const SurfaceRing& ring, DegreeClass a,
                                const std::vector<CoxPoint<Rational>>& points);

/// Random integer surface points, reproducible from the seed.
std::vector<CoxPoint<Rational>> random_surface_points(const SurfaceRing& ring, std::size_t k,
                                                      std::uint64_t seed);

/// Exact rank of the Terracini matrix at k random points.
std::size_t terracini_dimension(const SurfaceRing& ring, DegreeClass a, int k, std::uint64_t seed);

struct RankCertificate {
  SurfaceRing ring = SurfaceRing::p1xp1();
  DegreeClass degree;
  std::optional<int> formula_rank;            // only for P1xP1
  std::map<int, std::size_t> terracini_dims;  // max over seeds
  int verified_rank = 0;                      // 0 if never full
  std::vector<int> defective_ks;
  bool agrees = false;                        // formula_rank == verified_rank (true when no formula)
};

/// Terracini dimensions for k = 1 .. max_k (formula rank + 1 by default, or
/// until the span is full when no formula exists), maximized over the seeds.
RankCertificate certify_rank(const SurfaceRing& ring, DegreeClass a, const std::vector<std::uint64_t>& seeds,
                             Schedule schedule = Schedule::Parallel);

}  // namespace apolar
