#include "apolar/secant_rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace apolar {

int rank_formula(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("rank_formula: bidegree entries must be positive");
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (lo == 2 && hi % 2 == 0) return hi + 2;
  const int n = (a + 1) * (b + 1);
  return (n + 2) / 3;
}

int vps_dimension(int a, int b) {
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  if (lo == 2 && hi % 2 == 0) return 3;
  const int n = (a + 1) * (b + 1);
  return 3 * ((n + 2) / 3) - n;
}

int vps_dimension_from_rank(int r, int a, int b) { return 3 * r - 1 - (a * b + a + b); }

RationalMatrix terracini_matrix(const SurfaceRing& ring, DegreeClass a,
                                const std::vector<CoxPoint<Rational>>& points) {
  const auto mons = monomials(ring, a);
  RationalMatrix m(4 * points.size(), mons.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t v = 0; v < 4; ++v)
      for (std::size_t j = 0; j < mons.size(); ++j) {
        Exponent e = mons[j];
        if (e[v] == 0) continue;
        const int mult = e[v];
        --e[v];
        m(4 * p + v, j) = Rational(mult) * monomial_value(e, points[p]);
      }
  return m;
}

std::vector<CoxPoint<Rational>> random_surface_points(const SurfaceRing& ring, std::size_t k,
                                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CoxPoint<Rational>> pts;
  while (pts.size() < k) {
    CoxPoint<Rational> p;
    for (auto& c : p) c = Rational(uniform_int(rng, -30, 30));
    if (!in_irrelevant_locus(ring, p)) pts.push_back(p);
  }
  return pts;
}

std::size_t terracini_dimension(const SurfaceRing& ring, DegreeClass a, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("terracini_dimension: k must be positive");
  const auto pts = random_surface_points(ring, static_cast<std::size_t>(k),
                                         derive_seed(seed, {static_cast<std::uint64_t>(k)}));
  return rank_exact(terracini_matrix(ring, a, pts));
}

RankCertificate certify_rank(const SurfaceRing& ring, DegreeClass a, const std::vector<std::uint64_t>& seeds,
                             Schedule schedule) {
  if (seeds.empty()) throw std::invalid_argument("certify_rank: no seeds");
  RankCertificate cert;
  cert.ring = ring;
  cert.degree = a;
  if (ring.surface() == Surface::P1xP1 && a.a >= 1 && a.b >= 1) cert.formula_rank = rank_formula(a.a, a.b);
  const auto n = dim(ring, a);
  const int max_k = cert.formula_rank ? *cert.formula_rank + 1 : static_cast<int>((n + 2) / 3) + 1;

  auto run_range = [&](int k_lo, int k_hi) {
    const std::size_t kn = static_cast<std::size_t>(k_hi - k_lo + 1);
    const auto dims = run_indexed<std::size_t>(kn * seeds.size(), schedule, [&](std::size_t job) {
      const int k = k_lo + static_cast<int>(job / seeds.size());
      return terracini_dimension(ring, a, k, seeds[job % seeds.size()]);
    });
    for (std::size_t job = 0; job < dims.size(); ++job) {
      const int k = k_lo + static_cast<int>(job / seeds.size());
      auto& slot = cert.terracini_dims[k];
      slot = std::max(slot, dims[job]);
    }
  };
  run_range(1, max_k);
  // no formula: keep going until the secant variety fills the space
  for (int k = max_k + 1; cert.terracini_dims.rbegin()->second < n && k <= static_cast<int>(n); ++k)
    run_range(k, k);

  for (const auto& [k, d] : cert.terracini_dims) {
    if (cert.verified_rank == 0 && d == n) cert.verified_rank = k;
    if (d < std::min<std::size_t>(3 * static_cast<std::size_t>(k), n)) cert.defective_ks.push_back(k);
  }
  cert.agrees = !cert.formula_rank || *cert.formula_rank == cert.verified_rank;
  return cert;
}

}  // namespace apolar
