// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "apolar/apolarity.hpp"
#include "apolar/binary_sylvester.hpp"
#include "apolar/case22.hpp"
#include "apolar/case33.hpp"
#include "apolar/casef1.hpp"
#include "apolar/decompose.hpp"
#include "apolar/secant_rank.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace apolar;

namespace {

const SurfaceRing P = SurfaceRing::p1xp1();
const SurfaceRing F = SurfaceRing::f1();

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  // records the first failure only
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

std::size_t idim(const ExactForm& f, DegreeClass b) { return orthogonal_component(f, b).size(); }

// span of T_{shift} * I_{f,b} over all pieces equals I_{f,c}
bool generates(const ExactForm& f, const std::vector<std::pair<DegreeClass, DegreeClass>>& pieces, DegreeClass c,
               std::size_t expected_rank) {
  std::vector<RationalVector> span;
  for (const auto& [shift, b] : pieces) {
    auto part = multiply_span(f.ring(), shift, b, orthogonal_component(f, b));
    span.insert(span.end(), part.begin(), part.end());
  }
  const auto target = orthogonal_component(f, c);
  const auto n = dim(f.ring(), c);
  return span_rank(span, n) == expected_rank && target.size() == expected_rank && span_contains(target, span, n);
}

// ---------------------------------------------------------------------------

void dims22(Outcome& o) {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto f = random_form(P, Side::S, {2, 2}, s);
    const auto tag = "seed " + std::to_string(s) + ": ";
    o.require(idim(f, {2, 1}) == 4, tag + "dim I(2,1) != 4");
    o.require(idim(f, {1, 2}) == 4, tag + "dim I(1,2) != 4");
    o.require(idim(f, {1, 1}) == 0, tag + "dim I(1,1) != 0");
    o.require(generates(f, {{{0, 1}, {2, 1}}}, {2, 2}, 8), tag + "T(0,1) I(2,1) != I(2,2) of dim 8");
  }
  if (o.ok) o.detail << "20 seeds: I(2,1)=I(1,2)=4, I(1,1)=0, T(0,1)I(2,1)=I(2,2), dim 8";
}

void dims33(Outcome& o) {
  const std::vector<std::pair<DegreeClass, std::size_t>> want{
      {{2, 2}, 5}, {{3, 1}, 5}, {{1, 3}, 5}, {{2, 3}, 10}, {{3, 2}, 10}, {{3, 3}, 15}};
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto f = random_form(P, Side::S, {3, 3}, s);
    const auto tag = "seed " + std::to_string(s) + ": ";
    for (const auto& [b, n] : want) o.require(idim(f, b) == n, tag + "dim I(" + to_string(b) + ") != " + std::to_string(n));
    o.require(generates(f, {{{0, 1}, {2, 2}}}, {2, 3}, 10), tag + "T(0,1) I(2,2) != I(2,3)");
    o.require(generates(f, {{{1, 0}, {2, 2}}}, {3, 2}, 10), tag + "T(1,0) I(2,2) != I(3,2)");
    o.require(generates(f, {{{1, 1}, {2, 2}}, {{0, 2}, {3, 1}}, {{2, 0}, {1, 3}}}, {3, 3}, 15),
              tag + "I(2,2), I(3,1), I(1,3) do not generate I(3,3)");
  }
  if (o.ok) o.detail << "20 seeds: 5/5/5/10/10/15 and three generation checks";
}

void dimsf1(Outcome& o) {
  o.require(dim(F, {1, 2}) == 5, "dim T(E+2F) != 5");
  o.require(dim(F, {2, 3}) == 9, "dim T(2E+3F) != 9");
  o.require(dim(F, {1, 3}) == 7, "dim S(E+3F) != 7");
  o.require(dim(F, {3, 3}) == 10, "dim T(3E+3F) != 10");
  o.require(dim(F, {3, 6}) == 22, "dim T(3E+6F) != 22");
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto f = random_form(F, Side::S, {3, 6}, s);
    const auto tag = "seed " + std::to_string(s) + ": ";
    o.require(idim(f, {2, 3}) == 2, tag + "dim I(2E+3F) != 2");
    o.require(idim(f, {2, 2}) == 0, tag + "dim I(2E+2F) != 0");
    o.require(idim(f, {1, 3}) == 0, tag + "dim I(E+3F) != 0");
  }
  if (o.ok) o.detail << "T dims 5/9/7/10/22; 20 seeds: I(2E+3F)=2, I(2E+2F)=I(E+3F)=0";
}

std::vector<DegreeClass> rank_grid() {
  std::vector<DegreeClass> g;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) g.push_back({a, b});
  g.push_back({2, 6});
  return g;
}

void ranks(Outcome& o) {
  for (const auto& d : rank_grid()) {
    const auto cert = certify_rank(P, d, {1, 2});
    o.require(cert.formula_rank && cert.agrees && cert.verified_rank == rank_formula(d.a, d.b),
              "certify_rank disagrees with the formula at (" + to_string(d) + ")");
  }
  o.require(terracini_dimension(P, {2, 2}, 3, 1) == 8, "(2,2) k=3 != 8");
  o.require(terracini_dimension(P, {2, 2}, 4, 1) == 9, "(2,2) k=4 != 9");
  o.require(terracini_dimension(P, {3, 3}, 6, 1) == 16, "(3,3) k=6 != 16");
  o.require(terracini_dimension(F, {3, 6}, 8, 1) == 22, "F1 3E+6F k=8 != 22");
  if (o.ok) o.detail << "grid 1<=a<=b<=4 and (2,6) agree; (2,2) 3->8, 4->9; (3,3) 6->16; F1 8->22";
}

void vps(Outcome& o) {
  o.require(vps_dimension(2, 2) == 3, "vps(2,2) != 3");
  o.require(vps_dimension(3, 3) == 2, "vps(3,3) != 2");
  for (const auto& d : rank_grid()) {
    const int r = rank_formula(d.a, d.b);
    const int expected = 3 * r - 1 - (d.a * d.b + d.a + d.b);
    o.require(vps_dimension(d.a, d.b) == expected, "vps dimension mismatch at (" + to_string(d) + ")");
  }
  if (o.ok) o.detail << "(2,2) -> 3, (3,3) -> 2, 3r-1-(ab+a+b) on the grid";
}

BinaryDualForm random_binary(int degree, Rng& rng) {
  std::vector<Complex> v(static_cast<std::size_t>(degree + 1));
  for (auto& z : v) z = complex_normal(rng);
  return BinaryDualForm::from_values(v);
}

void sylvester(Outcome& o) {
  Rng rng(derive_seed(6, {}));
  double worst = 0.0;
  for (int d : {5, 7, 9}) {
    for (int i = 0; i < 50; ++i) {
      const auto f = random_binary(d, rng);
      const auto dec = sylvester_decompose(f);
      const double err = relative_error(reconstruct(dec.points, dec.coefficients, d), f);
      worst = std::max(worst, err);
      o.require(dec.points.size() == static_cast<std::size_t>((d + 1) / 2),
                "degree " + std::to_string(d) + ": wrong number of points");
      o.require(err < 1e-8, "degree " + std::to_string(d) + ": reconstruction error " + std::to_string(err));
    }
  }
  const BinaryPoint p1{Complex(1.0, 0.0), Complex(0.3, -0.8)};
  const BinaryPoint p2{Complex(-0.4, 1.0), Complex(1.0, 0.6)};
  for (int d : {6, 8}) {
    const auto f = random_binary(d, rng);
    const auto a = sylvester_decompose(f, p1);
    const auto b = sylvester_decompose(f, p2);
    const auto n = static_cast<std::size_t>(d / 2 + 1);
    o.require(a.points.size() == n && b.points.size() == n, "degree " + std::to_string(d) + ": wrong length");
    o.require(relative_error(reconstruct(a.points, a.coefficients, d), f) < 1e-8 &&
                  relative_error(reconstruct(b.points, b.coefficients, d), f) < 1e-8,
              "degree " + std::to_string(d) + ": invalid decomposition");
    o.require(point_set_distance(a.points, b.points) > 1e-6,
              "degree " + std::to_string(d) + ": pencil members give the same points");
  }
  if (o.ok) o.detail << "150 odd forms, max error " << worst << "; degrees 6, 8 give two distinct decompositions";
}

void pipeline_22(Outcome& o) {
  const auto ctx = build_context(general_form_22(101).first);
  const auto hp = hyperplane_section_check(ctx, 12, 102);
  o.require(hp.samples == 12, "fewer than 12 samples");
  o.require(hp.numeric_rank == 5, "stack rank " + std::to_string(hp.numeric_rank) + " != 5");
  o.require(hp.gap < 1e-6, "sigma6/sigma1 = " + std::to_string(hp.gap));
  o.require(hp.max_relation_residual < 1e-10, "Pluecker relation residual " + std::to_string(hp.max_relation_residual));
  const auto q = implicitize_quartic(ctx);
  o.require(q.kernel_dim_quartic == 1, "quartic kernel dim " + std::to_string(q.kernel_dim_quartic));
  o.require(q.kernel_dim_cubic == 0, "cubic kernel dim " + std::to_string(q.kernel_dim_cubic));
  if (o.ok)
    o.detail << "12 samples, rank 5, gap " << hp.gap << ", relation " << hp.max_relation_residual
             << "; quartic kernel 1, cubic 0";
}

void pipeline_33(Outcome& o) {
  const auto f = random_form(P, Side::S, {3, 3}, 201);
  const auto lift = harmonic_lift(f);
  const auto pent = pentahedron(lift, 202);
  o.require(pent.agreeing_starts >= 3, "only " + std::to_string(pent.agreeing_starts) + " agreeing starts");
  o.require(pent.max_disagreement < 1e-6, "starts disagree by " + std::to_string(pent.max_disagreement));
  o.require(lift.perp2_dim == 6, "dim F2perp != 6");
  o.require(pent.ideal_dim == 5, "dim I(Gamma0, 2) != 5");
  o.require(pent.ideal_in_perp_residual < 1e-8, "I(Gamma0, 2) not inside F2perp");
  o.require(pent.min_segre_value > 1e-6, "Gamma0 meets the Segre quadric");
  const auto batch = vps33_samples(lift, pent, 10, 203);
  double worst = 0.0;
  o.require(batch.samples.size() == 10, "fewer than 10 samples");
  for (const auto& s : batch.samples) {
    worst = std::max(worst, s.span_residual);
    o.require(s.scheme.size() == 6 && s.apolar && s.span_residual < 1e-7,
              "sample not apolar, span residual " + std::to_string(s.span_residual));
  }
  if (o.ok)
    o.detail << pent.agreeing_starts << " agreeing starts (max " << pent.max_disagreement
             << "); ideal 5 in F2perp 6; 10 samples, max span residual " << worst;
}

void pipeline_f1(Outcome& o) {
  const auto ctx = build_f1_context(general_form_f1(301).first);
  const auto base = pencil_basepoints(ctx);
  o.require(base.intersection.count == 8 && base.scheme.size() == 8 && base.distinct, "base locus is not 8 distinct points");
  o.require(base.verdict.apolar, "base points not apolar");
  const auto batch = vps_f1_samples(ctx, 10, 302);
  o.require(batch.samples.size() == 10, "fewer than 10 samples");
  double res = 0, mem = 0, on = 0, e_dist = 0;
  for (const auto& s : batch.samples) {
    res = std::max(res, s.decomposition.residual);
    mem = std::max(mem, s.membership.residual);
    on = std::max(on, s.residual.on_curve);
    o.require(s.decomposition.residual < 1e-8, "sample residual " + std::to_string(s.decomposition.residual));
    o.require(s.membership.residual < 1e-8 && s.membership.rank == 1, "sample not on a unique curve of K");
    o.require(s.residual.n_dim == 2 && s.residual.on_curve < 1e-7, "residual point not on the curve");
    const auto r0 = residual_point(ctx, base.scheme, s.membership.coordinates);
    const double d = point_distance(F, r0.point, e_intersection(ctx, s.membership.coordinates));
    e_dist = std::max(e_dist, d);
    o.require(d < 1e-7, "residual point of Gamma0 is not E cap C");
  }
  if (o.ok)
    o.detail << "8 base points; 10 samples: residual " << res << ", membership " << mem << ", on curve " << on
             << "; Gamma0 residual vs E cap C " << e_dist;
}

// sum c_i nu_A(p_i) with small integer points, k of them
ExactForm planted(const SurfaceRing& ring, DegreeClass a, const std::vector<CoxPoint<Rational>>& pts, Rng& rng) {
  RationalVector w(dim(ring, a), Rational(0));
  const auto mons = monomials(ring, a);
  for (const auto& p : pts) {
    const Rational c(uniform_int(rng, 1, 9) * (uniform_int(rng, 0, 1) ? 1 : -1));
    for (std::size_t j = 0; j < mons.size(); ++j) w[j] += c * monomial_value(mons[j], p);
  }
  return from_functional_values(ring, a, w);
}

std::vector<CoxPoint<Rational>> distinct_points(const SurfaceRing& ring, std::size_t k, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto pts = random_surface_points(ring, k, derive_seed(seed, {attempt}));
    try {
      make_scheme(ring, pts);
      return pts;
    } catch (const std::invalid_argument&) {
    }
  }
}

bool same_bits(const Decomposition& a, const Decomposition& b) {
  if (a.scheme.points.size() != b.scheme.points.size() || a.coefficients.size() != b.coefficients.size()) return false;
  return std::memcmp(a.scheme.points.data(), b.scheme.points.data(), a.scheme.points.size() * sizeof(CoxPoint<Complex>)) == 0 &&
         std::memcmp(a.coefficients.data(), b.coefficients.data(), a.coefficients.size() * sizeof(Complex)) == 0 &&
         std::memcmp(&a.residual, &b.residual, sizeof(double)) == 0;
}

void properties(Outcome& o) {
  Rng rng(derive_seed(10, {}));

  // transpose duality
  int triples = 0;
  for (int i = 0; i < 100; ++i) {
    const SurfaceRing& ring = uniform_int(rng, 0, 1) ? P : F;
    const DegreeClass a{static_cast<int>(uniform_int(rng, 1, 4)), static_cast<int>(uniform_int(rng, 1, 6))};
    const auto f = random_form(ring, Side::S, a, derive_seed(10, {1, static_cast<std::uint64_t>(i)}));
    const auto below = degrees_below(ring, a);
    const auto b = below[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(below.size()) - 1))];
    const auto m = catalecticant(f, b);
    const auto t = catalecticant(f, a - b);
    o.require(m.matrix == t.matrix.transpose() && m.row_labels == t.col_labels,
              "transpose duality fails for " + ring.name() + " (" + to_string(a) + ") B=(" + to_string(b) + ")");
    ++triples;
  }

  // apolarity lemma on planted and non-planted pairs; the two is_apolar tests
  struct Case {
    SurfaceRing ring;
    DegreeClass a;
    std::size_t max_k;  // below the generic rank, so random forms are not apolar
  };
  const std::vector<Case> cases{{P, {2, 2}, 3}, {P, {2, 3}, 3}, {P, {3, 3}, 5}, {F, {2, 3}, 2}, {F, {3, 6}, 7}};
  int pairs = 0, disagreements = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& c = cases[static_cast<std::size_t>(i) % cases.size()];
    const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(c.max_k)));
    const auto pts = distinct_points(c.ring, k, derive_seed(10, {2, static_cast<std::uint64_t>(i)}));
    const auto s = make_scheme(c.ring, pts);
    const bool plant = i % 2 == 0;
    const auto f = plant ? planted(c.ring, c.a, pts, rng)
                         : random_form(c.ring, Side::S, c.a, derive_seed(10, {3, static_cast<std::uint64_t>(i)}));
    const auto lemma = apolarity_lemma_check(s, f);
    o.require(lemma.equivalent, "apolarity lemma equivalence fails on pair " + std::to_string(i));
    o.require(lemma.ideal_containment == plant, "pair " + std::to_string(i) + " has the wrong verdict");
    try {
      const auto ve = is_apolar(s, f);
      const auto vf = is_apolar(to_float(s), to_float(f), 1e-9);
      if (!ve.tests_agree || !vf.tests_agree || ve.apolar != vf.apolar || ve.apolar != plant) ++disagreements;
    } catch (const std::logic_error&) {
      ++disagreements;
    }
    ++pairs;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " is_apolar disagreements");

  // determinism of the decomposition search
  int runs = 0;
  const std::vector<std::pair<FloatForm, std::size_t>> problems{
      {to_float(random_form(P, Side::S, {2, 2}, 11)), 4}, {to_float(random_form(F, Side::S, {3, 6}, 12)), 8}};
  for (const auto& [form, k] : problems) {
    for (std::uint64_t seed : {1, 2}) {
      DecomposeOptions serial;
      serial.schedule = Schedule::Serial;
      DecomposeOptions parallel;
      const auto p1 = gauss_newton_decompose(DecompositionProblem::from_form(form, k, serial), seed);
      const auto p2 = gauss_newton_decompose(DecompositionProblem::from_form(form, k, parallel), seed);
      const auto p3 = gauss_newton_decompose(DecompositionProblem::from_form(form, k, parallel), seed);
      o.require(p1.success() && p2.success() && p3.success(), "decomposition failed");
      if (p1.success() && p2.success() && p3.success())
        o.require(same_bits(*p1.decomposition, *p2.decomposition) && same_bits(*p2.decomposition, *p3.decomposition),
                  "decomposition is not byte-identical across runs");
      ++runs;
    }
  }
  if (o.ok)
    o.detail << triples << " duality triples, " << pairs << " lemma pairs, 0 disagreements, " << runs
             << " decompositions byte-identical (serial, parallel, repeat)";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dimension tables (2,2)", 2.0, dims22},
      {2, "dimension tables (3,3)", 10.0, dims33},
      {3, "F1 tables", 5.0, dimsf1},
      {4, "rank certification", 60.0, ranks},
      {5, "VPS dimensions", 60.0, vps},
      {6, "Sylvester", 5.0, sylvester},
      {7, "(2,2) Pluecker hyperplane and quartic", 60.0, pipeline_22},
      {8, "(3,3) pentahedron and twisted cubics", 180.0, pipeline_33},
      {9, "F1 pencil, base points and residual points", 180.0, pipeline_f1},
      {10, "property suites", 60.0, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.ok && t < c.limit_seconds;
    if (!ok) ++failed;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.str().c_str(), t, c.limit_seconds);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
