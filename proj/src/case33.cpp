#include "apolar/case33.hpp"

#include "apolar/binary_sylvester.hpp"

#include <algorithm>
#include <cmath>

namespace apolar {

namespace {

const SurfaceRing kP = SurfaceRing::p1xp1();
const SurfaceRing kP3 = SurfaceRing::p3();

double segre_value(const P3Point& v) {
  double n = 0;
  for (const auto& z : v) n += std::norm(z);
  return std::abs(v[0] * v[3] - v[1] * v[2]) / n;
}

// Newton steps on v0 v3 - v1 v2 along the cubic, evaluated from the
// parametrization in the chart where the parameter is bounded. The expanded
// sextic loses accuracy at large roots.
BinaryPoint polish_on_quadric(const ComplexMatrix& c, const BinaryPoint& t) {
  const bool flip = std::abs(t[1]) > std::abs(t[0]);
  Complex s = flip ? t[0] / t[1] : t[1] / t[0];
  for (int it = 0; it < 6; ++it) {
    std::array<Complex, 4> v{}, dv{};
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index k = 0; k < 4; ++k) {
        const int e = static_cast<int>(flip ? 3 - k : k);
        v[static_cast<std::size_t>(i)] += c(i, k) * std::pow(s, e);
        if (e > 0) dv[static_cast<std::size_t>(i)] += c(i, k) * static_cast<double>(e) * std::pow(s, e - 1);
      }
    const Complex g = v[0] * v[3] - v[1] * v[2];
    const Complex dg = dv[0] * v[3] + v[0] * dv[3] - dv[1] * v[2] - v[1] * dv[2];
    if (dg == Complex(0.0)) break;
    const Complex step = g / dg;
    if (!std::isfinite(std::abs(step)) || std::abs(step) > 1e-3 * (1.0 + std::abs(s))) break;
    s -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(s))) break;
  }
  return flip ? BinaryPoint{s, Complex(1.0)} : BinaryPoint{Complex(1.0), s};
}

std::vector<Complex> cpoly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ComplexMatrix columns_of(const std::vector<P3Point>& pts, std::initializer_list<std::size_t> idx) {
  ComplexMatrix m(4, static_cast<Eigen::Index>(idx.size()));
  Eigen::Index c = 0;
  for (std::size_t i : idx) {
    for (Eigen::Index r = 0; r < 4; ++r) m(r, c) = pts[i][static_cast<std::size_t>(r)];
    ++c;
  }
  return m;
}

}  // namespace

double projective_distance(const P3Point& a, const P3Point& b) {
  Complex ip = 0;
  double na = 0, nb = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ip += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  if (na == 0 || nb == 0) throw std::domain_error("projective_distance: zero vector");
  double r2 = 0;
  const Complex s = ip / na;
  for (std::size_t i = 0; i < 4; ++i) r2 += std::norm(b[i] - s * a[i]);
  return std::sqrt(r2 / nb);
}

P3Point unit_point(const P3Point& v) {
  double n = 0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    n += std::norm(v[i]);
    if (std::abs(v[i]) > std::abs(v[big])) big = i;
  }
  if (n == 0) throw std::domain_error("unit_point: zero vector");
  const Complex phase = std::abs(v[big]) / v[big] / std::sqrt(n);
  P3Point out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = v[i] * phase;
  return out;
}

Exponent segre_substitute(const Exponent& z) { return {z[0] + z[1], z[2] + z[3], z[0] + z[2], z[1] + z[3]}; }

ExactForm segre_substitute(const ExactForm& g) {
  if (g.ring().surface() != Surface::P3) throw std::invalid_argument("segre_substitute: expected a P3 form");
  const int d = g.degree().a;
  ExactForm out(kP, g.side(), {d, d});
  for (const auto& [e, c] : g.terms()) out.add_term(segre_substitute(e), c);
  return out;
}

ExactForm segre_operator() {
  ExactForm d(kP3, Side::T, {2, 0});
  d.add_term({1, 0, 0, 1}, 1);
  d.add_term({0, 1, 1, 0}, -1);
  return d;
}

CubicLift harmonic_lift(const ExactForm& f) {
  if (!(f.ring() == kP) || f.side() != Side::S || f.degree() != DegreeClass{3, 3})
    throw std::invalid_argument("harmonic_lift: expected an S-side (3,3) form on P1xP1");
  const auto m3 = monomials(kP3, {3, 0});
  const auto m1 = monomials(kP3, {1, 0});
  const auto m2 = monomials(kP3, {2, 0});
  const auto target = monomials(kP, {3, 3});
  const ExactForm delta = segre_operator();

  RationalMatrix sys(target.size() + m1.size(), m3.size());
  for (std::size_t j = 0; j < m3.size(); ++j) {
    sys(monomial_index(kP, {3, 3}, segre_substitute(m3[j])), j) = 1;
    ExactForm mono(kP3, Side::S, {3, 0});
    mono.add_term(m3[j], 1);
    const auto dz = diff_apply(delta, mono).coefficients();
    for (std::size_t i = 0; i < m1.size(); ++i) sys(target.size() + i, j) = dz[i];
  }
  RationalVector rhs = f.coefficients();
  rhs.resize(target.size() + m1.size(), Rational(0));

  CubicLift lift{f, ExactForm(kP3, Side::S, {3, 0})};
  lift.system_rows = sys.rows();
  lift.system_rank = rank_exact(sys);
  const auto sol = solve_exact(sys, rhs);
  if (!sol || lift.system_rank != m3.size()) throw std::logic_error("harmonic_lift: structural system is singular");
  lift.F = ExactForm::from_coefficients(kP3, Side::S, {3, 0}, *sol);
  lift.substitution_exact = segre_substitute(lift.F) == f;
  lift.harmonic = diff_apply(delta, lift.F).is_zero();

  const auto perp = orthogonal_component(lift.F, {2, 0});
  lift.perp2_dim = perp.size();
  lift.perp2_contains_delta = span_contains(perp, {delta.coefficients()}, m2.size());
  std::vector<RationalVector> images;
  for (const auto& g : orthogonal_component_forms(lift.F, {2, 0})) images.push_back(segre_substitute(g).coefficients());
  const std::size_t n22 = dim(kP, {2, 2});
  lift.image_dim = span_rank(images, n22);
  const auto i22 = orthogonal_component(f, {2, 2});
  lift.i22_dim = i22.size();
  lift.image_is_i22 = lift.image_dim == lift.i22_dim && span_contains(i22, images, n22);
  return lift;
}

double p3_set_distance(const std::vector<P3Point>& a, const std::vector<P3Point>& b) {
  if (a.size() != b.size()) return 1.0;
  double worst = 0;
  auto one_way = [&](const std::vector<P3Point>& x, const std::vector<P3Point>& y) {
    for (const auto& p : x) {
      double best = 1.0;
      for (const auto& q : y) best = std::min(best, projective_distance(p, q));
      worst = std::max(worst, best);
    }
  };
  one_way(a, b);
  one_way(b, a);
  return worst;
}

Pentahedron pentahedron(const CubicLift& lift, std::uint64_t seed, Schedule schedule, int restarts) {
  DecompositionProblem problem;
  problem.ring = kP3;
  problem.degree = {3, 0};
  problem.target = functional_values(to_float(lift.F));
  problem.length = 5;
  problem.options.restarts = restarts;
  problem.options.schedule = schedule;
  const auto all = decompose_all(problem, seed, 3);
  if (all.size() < 3)
    throw GenericityError("pentahedron", "only " + std::to_string(all.size()) + " successful starts out of " +
                                             std::to_string(restarts));

  Pentahedron out;
  for (const auto& p : all[0].scheme.points) out.points.push_back(unit_point(p));
  out.coefficients = all[0].coefficients;
  out.residual = all[0].residual;
  out.agreeing_starts = 1;
  for (std::size_t i = 1; i < all.size(); ++i) {
    std::vector<P3Point> other;
    for (const auto& p : all[i].scheme.points) other.push_back(unit_point(p));
    const double d = p3_set_distance(out.points, other);
    out.max_disagreement = std::max(out.max_disagreement, d);
    if (d > 1e-6)
      throw GenericityError("pentahedron uniqueness",
                            "starts " + std::to_string(all[0].start_index) + " and " +
                                std::to_string(all[i].start_index) + " disagree by " + std::to_string(d));
    ++out.agreeing_starts;
  }
  out.starts_run = all.back().start_index + 1;

  const ComplexMatrix ideal = scheme_ideal_component(all[0].scheme, {2, 0}, 1e-8);
  out.ideal_dim = static_cast<std::size_t>(ideal.cols());
  const ComplexMatrix cat = catalecticant_matrix(to_float(lift.F), {2, 0});
  out.ideal_in_perp_residual = ideal.cols() ? (cat * ideal).norm() / cat.norm() : 0.0;
  out.min_segre_value = 1.0;
  for (const auto& p : out.points) out.min_segre_value = std::min(out.min_segre_value, segre_value(p));
  return out;
}

P3Point TwistedCubic::at(const BinaryPoint& t) const {
  P3Point v{};
  for (Eigen::Index k = 0; k < 4; ++k) {
    const Complex w = std::pow(t[1], static_cast<int>(k)) * std::pow(t[0], static_cast<int>(3 - k));
    for (Eigen::Index i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] += coefficients(i, k) * w;
  }
  return v;
}

TwistedCubic twisted_cubic_through(const std::vector<P3Point>& input) {
  if (input.size() != 6) throw std::invalid_argument("twisted_cubic_through: expected 6 points");
  std::vector<P3Point> pts;
  for (const auto& p : input) pts.push_back(unit_point(p));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k)
        if (numeric_rank(columns_of(pts, {i, j, k}), 1e-9) < 3)
          throw GenericityError("no three collinear", "points " + std::to_string(i) + ", " + std::to_string(j) +
                                                          ", " + std::to_string(k) + " are collinear");
  // the frame below needs every four of the six to span P3
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k)
        for (std::size_t l = k + 1; l < 6; ++l)
          if (numeric_rank(columns_of(pts, {i, j, k, l}), 1e-9) < 4)
            throw GenericityError("no four coplanar", "points " + std::to_string(i) + ", " + std::to_string(j) +
                                                          ", " + std::to_string(k) + ", " + std::to_string(l) +
                                                          " are coplanar");

  // frame: p0..p3 -> coordinate points, p4 -> (1,1,1,1); the cubic is then
  // t -> (1/(t - l_i))_i with p4 at t = oo and p5 at t = 0
  const ComplexMatrix a = columns_of(pts, {0, 1, 2, 3});
  Eigen::Vector4cd p4, p5;
  for (Eigen::Index r = 0; r < 4; ++r) {
    p4(r) = pts[4][static_cast<std::size_t>(r)];
    p5(r) = pts[5][static_cast<std::size_t>(r)];
  }
  const Eigen::Vector4cd scale = a.partialPivLu().solve(p4);
  const ComplexMatrix b = a * scale.asDiagonal();
  const Eigen::Vector4cd q = b.partialPivLu().solve(p5);
  std::array<Complex, 4> lambda;
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = -1.0 / q(static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (std::abs(lambda[i] - lambda[j]) < 1e-9 * (std::abs(lambda[i]) + std::abs(lambda[j])))
        throw GenericityError("frame parameters", "coincident frame parameters");

  ComplexMatrix x = ComplexMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Complex> roots;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) roots.push_back(lambda[j]);
    const auto c = poly_from_roots(roots);
    for (std::size_t k = 0; k < 4; ++k) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = c[k];
  }
  TwistedCubic out;
  out.coefficients = b * x;
  out.coefficients /= out.coefficients.norm();
  for (std::size_t i = 0; i < 4; ++i) out.parameters.push_back({Complex(1.0), lambda[i]});
  out.parameters.push_back({Complex(0.0), Complex(1.0)});
  out.parameters.push_back({Complex(1.0), Complex(0.0)});
  for (std::size_t i = 0; i < 6; ++i)
    out.max_point_residual = std::max(out.max_point_residual, projective_distance(out.at(out.parameters[i]), pts[i]));
  out.rank = numeric_rank(out.coefficients, 1e-9);
  return out;
}

ComplexMatrix cubic_quadrics(const TwistedCubic& c) {
  const auto q2 = monomials(kP3, {2, 0});
  const int n = 14;
  ComplexMatrix m(n, static_cast<Eigen::Index>(q2.size()));
  for (int s = 0; s < n; ++s) {
    const Complex t = std::polar(0.8 + 0.05 * s, 2.0 * M_PI * s / n);
    const auto v = unit_point(c.at({Complex(1.0), t}));
    for (std::size_t k = 0; k < q2.size(); ++k) m(s, static_cast<Eigen::Index>(k)) = monomial_value(q2[k], v);
  }
  return numeric_kernel(m, 1e-9);
}

Vps33Sample vps33_sample(const CubicLift& lift, const Pentahedron& pent, std::uint64_t seed) {
  Rng rng(seed);
  const BinaryPoint x{complex_normal(rng), complex_normal(rng)};
  const BinaryPoint y{complex_normal(rng), complex_normal(rng)};
  Vps33Sample out;
  out.planted = unit_point({x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]});

  auto six = pent.points;
  six.push_back(out.planted);
  try {
    out.cubic = twisted_cubic_through(six);
  } catch (const GenericityError& e) {
    throw SampleRejected(std::string("twisted cubic: ") + e.what());
  }

  std::array<std::vector<Complex>, 4> v;
  for (std::size_t i = 0; i < 4; ++i)
    for (Eigen::Index k = 0; k < 4; ++k) v[i].push_back(out.cubic.coefficients(static_cast<Eigen::Index>(i), k));
  auto sextic = cpoly_mul(v[0], v[3]);
  const auto other = cpoly_mul(v[1], v[2]);
  for (std::size_t k = 0; k < sextic.size(); ++k) sextic[k] -= other[k];
  const auto roots = roots_univariate(sextic, 1e-12);
  std::vector<BinaryPoint> params;
  for (const auto& r : roots.roots) params.push_back({Complex(1.0), r});
  for (std::size_t i = 0; i < roots.at_infinity; ++i) params.push_back({Complex(0.0), Complex(1.0)});
  if (params.size() != 6) throw SampleRejected("quadric section does not have 6 points");
  for (auto& t : params) t = polish_on_quadric(out.cubic.coefficients, t);

  for (const auto& t : params) out.quadric_points.push_back(unit_point(out.cubic.at(t)));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (projective_distance(out.quadric_points[i], out.quadric_points[j]) < 1e-6)
        throw SampleRejected("clustered quadric points");

  std::vector<CoxPoint<Complex>> cox;
  std::vector<BinaryPoint> xs;
  for (const auto& p : out.quadric_points) {
    out.max_det = std::max(out.max_det, segre_value(p));
    const BinaryPoint c0{p[0], p[2]}, c1{p[1], p[3]};
    const BinaryPoint r0{p[0], p[1]}, r1{p[2], p[3]};
    auto n2 = [](const BinaryPoint& b) { return std::norm(b[0]) + std::norm(b[1]); };
    const BinaryPoint px = normalize_binary(n2(c0) >= n2(c1) ? c0 : c1);
    const BinaryPoint py = normalize_binary(n2(r0) >= n2(r1) ? r0 : r1);
    xs.push_back(px);
    cox.push_back({px[0], px[1], py[0], py[1]});
  }
  for (std::size_t i = 0; i < 6; ++i) {
    int same = 0;
    for (std::size_t j = 0; j < 6; ++j)
      if (j != i && binary_point_distance(xs[i], xs[j]) < 1e-6) ++same;
    if (same >= 2) throw SampleRejected("three x-projections coincide");
  }
  try {
    out.scheme = make_scheme(kP, cox, 1e-8);
  } catch (const std::invalid_argument& e) {
    throw SampleRejected(std::string("scheme: ") + e.what());
  }
  out.planted_distance = 1.0;
  for (const auto& p : out.quadric_points)
    out.planted_distance = std::min(out.planted_distance, projective_distance(p, out.planted));

  const auto verdict = is_apolar_values(out.scheme, {3, 3}, functional_values(to_float(lift.f)), 1e-7);
  out.apolar = verdict.apolar;
  out.span_residual = verdict.span_residual;
  out.ideal_residual = verdict.ideal_residual;
  return out;
}

Vps33Batch vps33_samples(const CubicLift& lift, const Pentahedron& pent, std::size_t n, std::uint64_t seed,
                         Schedule schedule) {
  struct Slot {
    std::optional<Vps33Sample> sample;
    std::size_t rejected = 0;
  };
  constexpr int kAttempts = 16;
  auto slots = run_indexed<Slot>(n, schedule, [&](std::size_t i) {
    Slot s;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      try {
        s.sample = vps33_sample(lift, pent, derive_seed(seed, {static_cast<std::uint64_t>(i),
                                                               static_cast<std::uint64_t>(attempt)}));
        return s;
      } catch (const SampleRejected&) {
        ++s.rejected;
      }
    }
    return s;
  });
  Vps33Batch out;
  for (auto& s : slots) {
    out.rejected += s.rejected;
    if (!s.sample) throw SampleRejected("vps33_samples: retry budget exhausted");
    out.samples.push_back(std::move(*s.sample));
  }
  return out;
}

}  // namespace apolar
