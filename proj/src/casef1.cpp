#include "apolar/casef1.hpp"

#include "apolar/binary_sylvester.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace apolar {

namespace {

const SurfaceRing kF = SurfaceRing::f1();
constexpr DegreeClass kA{3, 6};
constexpr DegreeClass kK{2, 3};
constexpr DegreeClass kN{3, 3};

std::string class_name(DegreeClass d) {
  std::string s;
  if (d.a) s += (d.a == 1 ? "" : std::to_string(d.a)) + "E";
  if (d.b) s += (s.empty() ? "" : "+") + (d.b == 1 ? std::string() : std::to_string(d.b)) + "F";
  return s.empty() ? "0" : s;
}

double coeff_norm(const FloatForm& h) {
  double n = 0;
  for (const auto& [e, c] : h.terms()) n += std::norm(c);
  return std::sqrt(n);
}

CoxPoint<Complex> chart_normalize(const CoxPoint<Complex>& p) {
  const auto c = best_chart(kF, p);
  return normalize_to_chart(kF, p, c[0], c[1]);
}

// Bivariate polynomial in the chart t0 = u0 = 1 (x = t1, y = u1): coef[i][k]
// multiplies x^i y^k.
struct ChartPoly {
  std::vector<std::vector<Complex>> coef;
  int dx = 0;
  int dy = 0;

  explicit ChartPoly(const FloatForm& h) {
    dx = std::min(h.degree().a, h.degree().b);
    dy = h.degree().b;
    coef.assign(static_cast<std::size_t>(dx + 1), std::vector<Complex>(static_cast<std::size_t>(dy + 1), 0.0));
    for (const auto& [e, c] : h.terms()) coef[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[3])] += c;
  }

  // coefficients in y at fixed x
  std::vector<Complex> in_y(Complex x) const {
    std::vector<Complex> out(static_cast<std::size_t>(dy + 1), 0.0);
    Complex xp = 1.0;
    for (int i = 0; i <= dx; ++i) {
      for (int k = 0; k <= dy; ++k) out[static_cast<std::size_t>(k)] += coef[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * xp;
      xp *= x;
    }
    return out;
  }

  void eval(Complex x, Complex y, Complex& v, Complex& vx, Complex& vy) const {
    v = vx = vy = 0;
    for (int i = 0; i <= dx; ++i)
      for (int k = 0; k <= dy; ++k) {
        const Complex c = coef[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (c == Complex(0.0)) continue;
        v += c * std::pow(x, i) * std::pow(y, k);
        if (i > 0) vx += c * static_cast<double>(i) * std::pow(x, i - 1) * std::pow(y, k);
        if (k > 0) vy += c * static_cast<double>(k) * std::pow(x, i) * std::pow(y, k - 1);
      }
  }
};

// Sylvester matrix of two polynomials (ascending coefficients) of formal
// degrees m = p.size()-1, n = q.size()-1.
ComplexMatrix sylvester(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  const auto m = static_cast<Eigen::Index>(p.size()) - 1;
  const auto n = static_cast<Eigen::Index>(q.size()) - 1;
  ComplexMatrix s = ComplexMatrix::Zero(m + n, m + n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index k = 0; k <= m; ++k) s(r, r + m - k) = p[static_cast<std::size_t>(k)];
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index k = 0; k <= n; ++k) s(n + r, r + n - k) = q[static_cast<std::size_t>(k)];
  return s;
}

// Common roots of the restrictions a, b of two forms to a line; scale_a and
// scale_b are the norms of the full forms. A restriction that vanishes
// relative to its form imposes no condition.
std::vector<Complex> common_roots(const std::vector<Complex>& a, const std::vector<Complex>& b, double scale_a,
                                  double scale_b, bool& both_zero, std::size_t& at_infinity) {
  auto norm = [](const std::vector<Complex>& v) {
    double n = 0;
    for (const auto& z : v) n += std::norm(z);
    return std::sqrt(n);
  };
  const double na = norm(a), nb = norm(b);
  const bool za = na <= 1e-12 * scale_a;
  const bool zb = nb <= 1e-12 * scale_b;
  both_zero = (za && zb);
  at_infinity = 0;
  if (both_zero) return {};
  const auto& lead = za ? b : a;
  const auto& other = za ? a : b;
  const bool other_zero = za || zb;
  const auto r = roots_univariate(lead, 1e-12 * (za ? scale_b : scale_a) / (za ? nb : na));
  std::vector<Complex> out;
  const double on = norm(other);
  for (const auto& z : r.roots) {
    if (other_zero) {
      out.push_back(z);
      continue;
    }
    // |other(z)| against the size of the terms at z
    Complex v = 0;
    double mag = 0;
    for (std::size_t k = 0; k < other.size(); ++k) {
      v += other[k] * std::pow(z, static_cast<int>(k));
      mag += std::abs(other[k]) * std::pow(std::abs(z), static_cast<int>(k));
    }
    if (std::abs(v) <= 1e-8 * std::max(mag, on)) out.push_back(z);
  }
  if (r.at_infinity > 0) {
    const bool other_top_zero = other_zero || std::abs(other.back()) <= 1e-12 * (za ? scale_a : scale_b);
    if (other_top_zero) at_infinity = r.at_infinity;
  }
  return out;
}

}  // namespace

double normalized_value(const FloatForm& h, const CoxPoint<Complex>& p) {
  const auto nu = evaluation_vector(h.ring(), h.degree(), p);
  double nn = 0;
  for (const auto& z : nu) nn += std::norm(z);
  const double hn = coeff_norm(h);
  if (hn == 0 || nn == 0) return 0.0;
  return std::abs(evaluate(h, p)) / (hn * std::sqrt(nn));
}

F1Context build_f1_context(const ExactForm& f) {
  if (!(f.ring() == kF) || f.side() != Side::S || f.degree() != kA)
    throw std::invalid_argument("build_f1_context: expected an S-side 3E+6F form on F1");
  F1Context ctx{f, {ExactForm(kF, Side::T, kK), ExactForm(kF, Side::T, kK)}, {}, {}, 0, 0};
  for (DegreeClass d : {DegreeClass{3, 3}, kK, DegreeClass{1, 3}, DegreeClass{1, 2}, kA})
    ctx.t_dims[class_name(d)] = dim(kF, d);
  const auto cat = catalecticant(f, kK);
  ctx.catalecticant_rows = cat.matrix.rows();
  ctx.catalecticant_cols = cat.matrix.cols();
  const std::array<std::pair<DegreeClass, std::size_t>, 3> expected{{{kK, 2}, {{2, 2}, 0}, {{1, 3}, 0}}};
  for (const auto& [d, want] : expected) {
    const std::size_t got = orthogonal_component(f, d).size();
    ctx.ideal_dims[class_name(d)] = got;
    if (got != want)
      throw GenericityError("dim I_f(" + class_name(d) + ")", "dim I_f(" + class_name(d) + ") = " +
                                                                 std::to_string(got) + ", expected " +
                                                                 std::to_string(want));
  }
  const auto basis = orthogonal_component_forms(f, kK);
  ctx.pencil = {basis[0], basis[1]};
  return ctx;
}

std::pair<ExactForm, int> general_form_f1(std::uint64_t seed, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const auto f = random_form(kF, Side::S, kA, derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    try {
      build_f1_context(f);
      return {f, attempt};
    } catch (const GenericityError&) {
    }
  }
  throw GenericityError("general form", "no general 3E+6F form within the attempt budget");
}

IntersectionResult intersect_f1(const FloatForm& h1, const FloatForm& h2) {
  if (!(h1.ring() == kF) || !(h2.ring() == kF) || h1.side() != Side::T || h2.side() != Side::T)
    throw std::invalid_argument("intersect_f1: expected T-side forms on F1");
  IntersectionResult out;
  std::vector<CoxPoint<Complex>> raw;

  // main chart: eliminate y with a resultant, interpolated from samples of x on the unit circle
  const ChartPoly p1(h1), p2(h2);
  const int bound = p2.dy * p1.dx + p1.dy * p2.dx;
  const int n = bound + 1;
  std::vector<Complex> samples(static_cast<std::size_t>(n));
  double hadamard = 0;
  for (int k = 0; k < n; ++k) {
    const Complex x = std::polar(1.0, 2.0 * M_PI * k / n);
    const ComplexMatrix s = sylvester(p1.in_y(x), p2.in_y(x));
    samples[static_cast<std::size_t>(k)] = s.partialPivLu().determinant();
    double h = 1;
    for (Eigen::Index r = 0; r < s.rows(); ++r) h *= std::max(s.row(r).norm(), 1e-300);
    hadamard = std::max(hadamard, h);
  }
  std::vector<Complex> res(static_cast<std::size_t>(n), 0.0);
  double rmax = 0;
  for (int j = 0; j < n; ++j) {
    Complex acc = 0;
    for (int k = 0; k < n; ++k) acc += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * M_PI * j * k / n);
    res[static_cast<std::size_t>(j)] = acc / static_cast<double>(n);
    rmax = std::max(rmax, std::abs(res[static_cast<std::size_t>(j)]));
  }
  if (rmax <= 1e-12 * hadamard) throw GenericityError("resultant", "the curves share a component");
  const auto xs = roots_univariate(res, 1e-10);
  for (const auto& x : xs.roots) {
    const auto ry = roots_univariate(p1.in_y(x), 1e-12);
    Complex best_y = 0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : ry.roots) {
      Complex v, vx, vy;
      p2.eval(x, y, v, vx, vy);
      const double r = std::abs(v) / (1.0 + std::pow(std::abs(y), p2.dy));
      if (r < best) {
        best = r;
        best_y = y;
      }
    }
    if (!std::isfinite(best)) continue;
    // Newton polish on both equations
    Complex cx = x, cy = best_y;
    for (int it = 0; it < 20; ++it) {
      Complex f1, f1x, f1y, f2, f2x, f2y;
      p1.eval(cx, cy, f1, f1x, f1y);
      p2.eval(cx, cy, f2, f2x, f2y);
      const Complex det = f1x * f2y - f1y * f2x;
      if (std::abs(det) == 0) break;
      const Complex dx = (f1 * f2y - f1y * f2) / det;
      const Complex dy = (f1x * f2 - f1 * f2x) / det;
      cx -= dx;
      cy -= dy;
      if (std::abs(dx) + std::abs(dy) < 1e-15 * (1 + std::abs(cx) + std::abs(cy))) break;
    }
    raw.push_back({1.0, cx, 1.0, cy});
    ++out.main_chart;
  }

  // t0 = 0: only monomials t1^a u^(b-a) survive; binary forms in s = u1/u0
  // (identically zero when a > b)
  auto restrict_e = [](const FloatForm& h) {
    std::vector<Complex> v(static_cast<std::size_t>(std::max(h.degree().b - h.degree().a, 0) + 1), 0.0);
    for (const auto& [e, c] : h.terms())
      if (e[0] == 0) v[static_cast<std::size_t>(e[3])] += c;
    return v;
  };
  {
    bool both_zero = false;
    std::size_t inf = 0;
    const auto r = common_roots(restrict_e(h1), restrict_e(h2), coeff_norm(h1), coeff_norm(h2), both_zero, inf);
    if (both_zero) throw GenericityError("common component", "both curves contain E");
    for (const auto& s : r) raw.push_back({0.0, 1.0, 1.0, s});
    for (std::size_t i = 0; i < inf; ++i) raw.push_back({0.0, 1.0, 0.0, 1.0});
    out.on_e = r.size() + inf;
  }

  // u0 = 0, t0 = 1: polynomials in x = t1
  auto restrict_u0 = [](const FloatForm& h) {
    std::vector<Complex> v(static_cast<std::size_t>(std::min(h.degree().a, h.degree().b) + 1), 0.0);
    for (const auto& [e, c] : h.terms())
      if (e[2] == 0) v[static_cast<std::size_t>(e[1])] += c;
    return v;
  };
  {
    bool both_zero = false;
    std::size_t inf = 0;
    const auto r = common_roots(restrict_u0(h1), restrict_u0(h2), coeff_norm(h1), coeff_norm(h2), both_zero, inf);
    if (both_zero) throw GenericityError("common component", "both curves contain the fiber u0 = 0");
    for (const auto& x : r) raw.push_back({1.0, x, 0.0, 1.0});
    out.on_u0 = r.size();
  }

  // merge
  for (const auto& p : raw) {
    const auto q = chart_normalize(p);
    bool merged = false;
    for (auto& ip : out.points)
      if (point_distance(kF, ip.point, q) < 1e-7) {
        ++ip.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.points.push_back({q, 1});
  }
  out.count = raw.size();
  for (const auto& ip : out.points)
    out.max_residual = std::max({out.max_residual, normalized_value(h1, ip.point), normalized_value(h2, ip.point)});
  return out;
}

BasePointSet pencil_basepoints(const F1Context& ctx) {
  BasePointSet out;
  out.intersection = intersect_f1(to_float(ctx.pencil[0]), to_float(ctx.pencil[1]));
  if (out.intersection.count != 8)
    throw std::logic_error("pencil_basepoints: found " + std::to_string(out.intersection.count) +
                           " base points with multiplicity, expected 8");
  out.distinct = out.intersection.points.size() == 8;
  out.off_e = true;
  std::vector<CoxPoint<Complex>> pts;
  for (const auto& ip : out.intersection.points) {
    if (std::abs(ip.point[0]) < 1e-8) out.off_e = false;
    pts.push_back(ip.point);
  }
  if (!out.distinct) return out;
  out.scheme = make_scheme(kF, pts, 1e-8);
  const auto w = functional_values(to_float(ctx.f));
  out.verdict = is_apolar_values(out.scheme, kA, w, 1e-8);
  ComplexMatrix stack = evaluation_matrix(out.scheme, kA);
  stack.conservativeResize(stack.rows() + 1, Eigen::NoChange);
  for (std::size_t j = 0; j < w.size(); ++j) stack(stack.rows() - 1, static_cast<Eigen::Index>(j)) = w[j];
  for (Eigen::Index r = 0; r < stack.rows(); ++r) stack.row(r).normalize();
  out.stack_rank = numeric_rank(stack, 1e-8);
  return out;
}

PencilMembership pencil_membership(const F1Context& ctx, const FloatScheme& gamma) {
  const FloatForm g1 = to_float(ctx.pencil[0]), g2 = to_float(ctx.pencil[1]);
  const double n1 = coeff_norm(g1), n2 = coeff_norm(g2);
  ComplexMatrix m(static_cast<Eigen::Index>(gamma.size()), 2);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const auto& p = gamma.points[i];
    const auto nu = evaluation_vector(kF, kK, p);
    double nn = 0;
    for (const auto& z : nu) nn += std::norm(z);
    nn = std::sqrt(nn);
    m(static_cast<Eigen::Index>(i), 0) = evaluate(g1, p) / (n1 * nn);
    m(static_cast<Eigen::Index>(i), 1) = evaluate(g2, p) / (n2 * nn);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  PencilMembership out;
  out.sigma_max = sv(0);
  out.residual = sv(0) > 0 ? sv(1) / sv(0) : 0.0;
  out.rank = static_cast<std::size_t>((sv.array() > 1e-8).count());
  // lambda g1 + mu g2 with the unnormalized generators
  Complex lam = svd.matrixV()(0, 1) / n1, mu = svd.matrixV()(1, 1) / n2;
  const double nrm = std::sqrt(std::norm(lam) + std::norm(mu));
  const Complex big = std::abs(lam) >= std::abs(mu) ? lam : mu;
  const Complex phase = std::abs(big) / big;
  out.coordinates = {lam * phase / nrm, mu * phase / nrm};
  return out;
}

IrreducibilityCheck check_irreducible(const FloatForm& curve) {
  if (curve.degree() != kK) throw std::invalid_argument("check_irreducible: expected a 2E+3F curve");
  const double cn = coeff_norm(curve);
  // c_j(u): coefficient of t0^(2-j) t1^j, a binary form of degree 3-j in s = u1/u0
  std::array<std::vector<Complex>, 3> c;
  for (int j = 0; j < 3; ++j) c[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(4 - j), 0.0);
  for (const auto& [e, v] : curve.terms()) c[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[3])] += v / cn;

  auto eval_h = [](const std::vector<Complex>& p, const BinaryPoint& u) {
    Complex acc = 0;
    const int d = static_cast<int>(p.size()) - 1;
    for (int k = 0; k <= d; ++k) acc += p[static_cast<std::size_t>(k)] * std::pow(u[0], d - k) * std::pow(u[1], k);
    return acc;
  };
  auto unit_u = [](Complex s, bool inf) {
    BinaryPoint u = inf ? BinaryPoint{0.0, 1.0} : BinaryPoint{1.0, s};
    const double n = std::sqrt(std::norm(u[0]) + std::norm(u[1]));
    return BinaryPoint{u[0] / n, u[1] / n};
  };
  auto roots_h = [&](const std::vector<Complex>& p) {
    std::vector<BinaryPoint> out;
    double n = 0;
    for (const auto& z : p) n += std::norm(z);
    if (n < 1e-24) return out;
    const auto r = roots_univariate(p, 1e-12);
    for (const auto& s : r.roots) out.push_back(unit_u(s, false));
    for (std::size_t i = 0; i < r.at_infinity; ++i) out.push_back(unit_u(0.0, true));
    return out;
  };

  IrreducibilityCheck out;
  // t0 | C  <=>  c_2 = 0
  {
    double n = 0;
    for (const auto& z : c[2]) n += std::norm(z);
    out.e_factor = std::sqrt(n);
  }
  // l(u) | C  <=>  c_0, c_1, c_2 share a root
  {
    out.f_factor = 1.0;
    for (const auto& u : roots_h(c[2]))
      out.f_factor = std::min(out.f_factor, std::max(std::abs(eval_h(c[0], u)), std::abs(eval_h(c[1], u))));
    if (out.e_factor < 1e-12) out.f_factor = 0.0;
  }
  // (a t1 + t0 l(u)) | C with a != 0: on t1 = t0 m(u), C = t0^2 (c0 + c1 m + c2 m^2)
  // must vanish identically, so m vanishes at a root of c0: m = s r(u).
  {
    double c0n = 0;
    for (const auto& z : c[0]) c0n += std::norm(z);
    out.ef_factor = c0n < 1e-24 ? 0.0 : 1.0;
    for (const auto& root : roots_h(c[0])) {
      const std::vector<Complex> r{root[1], -root[0]};  // r(u) = root1 u0 - root0 u1
      std::vector<Complex> rc1(4, 0.0), rrc2(4, 0.0);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) rc1[i + j] += c[1][i] * r[j];
      const std::vector<Complex> rr{r[0] * r[0], 2.0 * r[0] * r[1], r[1] * r[1]};
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) rrc2[i + j] += c[2][i] * rr[j];
      // c0 + s r c1 + s^2 r^2 c2 = 0 coefficientwise; candidates from each coefficient
      for (std::size_t k = 0; k < 4; ++k) {
        const std::vector<Complex> quad{c[0][k], rc1[k], rrc2[k]};
        if (std::abs(quad[1]) + std::abs(quad[2]) == 0) continue;
        for (const auto& sv : roots_univariate(quad, 1e-14).roots) {
          double worst = 0;
          for (std::size_t i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(c[0][i] + sv * rc1[i] + sv * sv * rrc2[i]) / (1.0 + std::norm(sv)));
          out.ef_factor = std::min(out.ef_factor, worst);
        }
      }
    }
  }
  out.irreducible = out.e_factor > 1e-8 && out.f_factor > 1e-8 && out.ef_factor > 1e-8;
  return out;
}

ResidualPoint residual_point(const F1Context& ctx, const FloatScheme& gamma,
                             const std::array<Complex, 2>& pencil_coordinates) {
  ResidualPoint out;
  const ComplexMatrix n = scheme_ideal_component(gamma, kN, 1e-8);
  out.n_dim = static_cast<std::size_t>(n.cols());
  if (n.cols() != 2) throw SampleRejected("dim N_Gamma = " + std::to_string(n.cols()) + ", expected 2");
  auto column_form = [&](Eigen::Index col) {
    std::vector<Complex> v(static_cast<std::size_t>(n.rows()));
    for (Eigen::Index i = 0; i < n.rows(); ++i) v[static_cast<std::size_t>(i)] = n(i, col);
    return FloatForm::from_coefficients(kF, Side::T, kN, v);
  };
  const FloatForm n1 = column_form(0), n2 = column_form(1);
  const FloatForm curve = to_float(ctx.pencil[0]).scaled(pencil_coordinates[0]) +
                          to_float(ctx.pencil[1]).scaled(pencil_coordinates[1]);

  auto extra_points = [&](const IntersectionResult& r) {
    std::vector<CoxPoint<Complex>> extra;
    for (const auto& ip : r.points) {
      double d = 1.0;
      for (const auto& g : gamma.points) d = std::min(d, point_distance(kF, ip.point, g));
      if (d > 1e-4)
        for (int m = 0; m < ip.multiplicity; ++m) extra.push_back(ip.point);
    }
    return extra;
  };

  const FloatForm member = n1 + n2.scaled(Complex(0.6180339887, 0.4142135624));
  const auto cut = intersect_f1(curve, member);
  out.intersection_count = cut.count;
  const auto extra = extra_points(cut);
  if (extra.size() != 1)
    throw SampleRejected("C cap C' has " + std::to_string(extra.size()) + " points outside Gamma, expected 1");
  out.point = extra[0];
  out.on_curve = normalized_value(curve, out.point);

  try {
    const auto base = intersect_f1(n1, n2);
    out.base_count = base.count;
    const auto bextra = extra_points(base);
    out.base_agreement = bextra.size() == 1 ? point_distance(kF, bextra[0], out.point) : 1.0;
  } catch (const GenericityError&) {
    // N_Gamma has a fixed component (Gamma = Gamma0: every member contains E)
  }
  return out;
}

CoxPoint<Complex> e_intersection(const F1Context& ctx, const std::array<Complex, 2>& lm) {
  const FloatForm c = to_float(ctx.pencil[0]).scaled(lm[0]) + to_float(ctx.pencil[1]).scaled(lm[1]);
  const Complex a = c.coefficient({0, 2, 1, 0});
  const Complex b = c.coefficient({0, 2, 0, 1});
  if (a == Complex(0.0) && b == Complex(0.0)) throw GenericityError("E component", "curve contains E");
  return {0.0, 1.0, b, -a};
}

F1Sample vps_f1_sample(const F1Context& ctx, std::uint64_t seed, DecomposeOptions options) {
  DecompositionProblem problem;
  problem.ring = kF;
  problem.degree = kA;
  problem.target = functional_values(to_float(ctx.f));
  problem.length = 8;
  problem.options = options;
  const auto result = gauss_newton_decompose(problem, seed);
  if (!result.success())
    throw SampleRejected("decomposition search exhausted, best residual " + std::to_string(result.best_residual));
  F1Sample s;
  // the membership test amplifies point errors; take the points to full precision
  s.decomposition = polish(*result.decomposition, problem, 20).decomposition;
  s.membership = pencil_membership(ctx, s.decomposition.scheme);
  const FloatForm curve = to_float(ctx.pencil[0]).scaled(s.membership.coordinates[0]) +
                          to_float(ctx.pencil[1]).scaled(s.membership.coordinates[1]);
  s.irreducibility = check_irreducible(curve);
  s.verdict = is_apolar_values(s.decomposition.scheme, kA, problem.target, 1e-8);
  s.residual = residual_point(ctx, s.decomposition.scheme, s.membership.coordinates);
  return s;
}

F1Batch vps_f1_samples(const F1Context& ctx, std::size_t n, std::uint64_t seed, Schedule schedule,
                       int restarts) {
  struct Slot {
    std::optional<F1Sample> sample;
    std::size_t rejected = 0;
  };
  constexpr int kAttempts = 8;
  DecomposeOptions opts;
  opts.schedule = Schedule::Serial;  // parallel over samples, not inside each search
  opts.restarts = restarts;
  auto slots = run_indexed<Slot>(n, schedule, [&](std::size_t i) {
    Slot s;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      try {
        s.sample = vps_f1_sample(ctx, derive_seed(seed, {static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(attempt)}),
                                 opts);
        return s;
      } catch (const SampleRejected&) {
        ++s.rejected;
      }
    }
    return s;
  });
  F1Batch out;
  for (auto& s : slots) {
    out.rejected += s.rejected;
    if (!s.sample) throw SampleRejected("vps_f1_samples: retry budget exhausted");
    out.samples.push_back(std::move(*s.sample));
  }
  out.min_residual_separation = 1.0;
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    for (std::size_t j = i + 1; j < out.samples.size(); ++j)
      out.min_residual_separation = std::min(
          out.min_residual_separation,
          point_distance(kF, out.samples[i].residual.point, out.samples[j].residual.point));
  return out;
}

}  // namespace apolar
