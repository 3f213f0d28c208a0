#include "apolar/case22.hpp"

#include <algorithm>
#include <cmath>

namespace apolar {

namespace {

const SurfaceRing kRing = SurfaceRing::p1xp1();

// ---- univariate polynomials, ascending coefficients -------------------------

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_mod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("poly_mod: division by zero polynomial");
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

template <class Scalar>
std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Splits a T-side (2,1) form as g0(t) u0 + g1(t) u1; coefficient k of gi is
// the coefficient of t0^(2-k) t1^k.
template <class Scalar>
std::array<std::vector<Scalar>, 2> split_u(const MultiForm<Scalar>& g) {
  std::array<std::vector<Scalar>, 2> out{std::vector<Scalar>(3, Scalar(0)), std::vector<Scalar>(3, Scalar(0))};
  for (const auto& [e, c] : g.terms()) out[e[2] == 1 ? 0 : 1][static_cast<std::size_t>(e[1])] = c;
  return out;
}

// Substitutes t = (1, s), u = (g1(s), -g0(s)) into a T-side monomial; the
// result is a binary form of degree a + 2b stored as a length a+2b+1 vector.
template <class Scalar>
std::vector<Scalar> substitute(const Exponent& m, const std::vector<Scalar>& g0, const std::vector<Scalar>& g1) {
  std::vector<Scalar> out(static_cast<std::size_t>(m[1] + 1), Scalar(0));
  out[static_cast<std::size_t>(m[1])] = Scalar(1);
  std::vector<Scalar> neg_g0 = g0;
  for (auto& c : neg_g0) c = -c;
  for (int i = 0; i < m[2]; ++i) out = poly_mul(out, g1);
  for (int i = 0; i < m[3]; ++i) out = poly_mul(out, neg_g0);
  const std::size_t degree = static_cast<std::size_t>(m[0] + m[1] + 2 * (m[2] + m[3]));
  out.resize(degree + 1, Scalar(0));
  return out;
}

ExactForm monomial_form(const Exponent& e) {
  ExactForm g(kRing, Side::T, kRing.degree_of(e));
  g.add_term(e, 1);
  return g;
}

// ---- split test ---------------------------------------------------------------

struct SideSplit {
  bool no_split = false;
  QPoly gcd;
};

// Pencil of the two partials p0, p1 in degree (2,1): lambda p0 + mu p1 =
// y0 Q0 + y1 Q1. Splits iff the 2x3 coefficient matrix [Q0; Q1] has rank <= 1
// for some (lambda : mu).
SideSplit pencil_split(const ExactForm& p0, const ExactForm& p1) {
  // q[r][j][s]: coefficient of x-monomial j in Q_r from partial s
  std::array<std::array<std::array<Rational, 2>, 3>, 2> q{};
  const std::array<const ExactForm*, 2> parts{&p0, &p1};
  for (std::size_t s = 0; s < 2; ++s)
    for (const auto& [e, c] : parts[s]->terms()) q[e[2] == 1 ? 0 : 1][static_cast<std::size_t>(e[1])][s] = c;

  // each minor as ascending polynomial in lambda (mu = 1): [mu^2, lambda mu, lambda^2]
  std::vector<QPoly> minors;
  bool top_all_zero = true;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) {
      // (l a0 + m a1)(l b0 + m b1) - (l c0 + m c1)(l d0 + m d1)
      const auto& a = q[0][j];
      const auto& b = q[1][k];
      const auto& c = q[0][k];
      const auto& d = q[1][j];
      QPoly m{a[1] * b[1] - c[1] * d[1], a[0] * b[1] + a[1] * b[0] - c[0] * d[1] - c[1] * d[0],
              a[0] * b[0] - c[0] * d[0]};
      if (sgn(m[2]) != 0) top_all_zero = false;
      minors.push_back(m);
    }
  QPoly g;
  for (auto m : minors) {
    trim(m);
    if (m.empty()) continue;
    g = g.empty() ? poly_gcd(m, m) : poly_gcd(g, m);
  }
  SideSplit out;
  out.gcd = g;
  const bool all_zero = g.empty();
  const bool finite_common_root = g.size() > 1;
  out.no_split = !all_zero && !finite_common_root && !top_all_zero;
  return out;
}

double cnorm(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<Complex> to_complex_vec(const RationalVector& v) {
  std::vector<Complex> out;
  for (const auto& q : v) out.emplace_back(q.get_d(), 0.0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Case22Context build_context(const ExactForm& f) {
  if (!(f.ring() == kRing) || f.side() != Side::S || f.degree() != DegreeClass{2, 2})
    throw std::invalid_argument("build_context: expected an S-side (2,2) form on P1xP1");
  const auto i21 = orthogonal_component_forms(f, {2, 1});
  const auto i12 = orthogonal_component_forms(f, {1, 2});
  const auto i11 = orthogonal_component(f, {1, 1});
  if (i21.size() != 4)
    throw GenericityError("dim I_f(2,1)", "dim I_f(2,1) = " + std::to_string(i21.size()) + ", expected 4");
  if (i12.size() != 4)
    throw GenericityError("dim I_f(1,2)", "dim I_f(1,2) = " + std::to_string(i12.size()) + ", expected 4");
  if (!i11.empty())
    throw GenericityError("dim I_f(1,1)", "dim I_f(1,1) = " + std::to_string(i11.size()) + ", expected 0");
  Case22Context ctx{f, i21, i12,
                    {diff_apply(monomial_form({0, 0, 1, 0}), f), diff_apply(monomial_form({0, 0, 0, 1}), f)},
                    {diff_apply(monomial_form({1, 0, 0, 0}), f), diff_apply(monomial_form({0, 1, 0, 0}), f)}};
  if (span_rank({ctx.partials_y[0].coefficients(), ctx.partials_y[1].coefficients()}, 6) != 2)
    throw GenericityError("partials y", "df/dy0 and df/dy1 are dependent");
  if (span_rank({ctx.partials_x[0].coefficients(), ctx.partials_x[1].coefficients()}, 6) != 2)
    throw GenericityError("partials x", "df/dx0 and df/dx1 are dependent");
  return ctx;
}

SplitCheck check_partials_not_split(const ExactForm& f) {
  const auto side21 = pencil_split(diff_apply(monomial_form({0, 0, 1, 0}), f),
                                   diff_apply(monomial_form({0, 0, 0, 1}), f));
  const auto g = swap_factors(f);
  const auto side12 = pencil_split(diff_apply(monomial_form({0, 0, 1, 0}), g),
                                   diff_apply(monomial_form({0, 0, 0, 1}), g));
  return {side21.no_split, side12.no_split, side21.gcd, side12.gcd};
}

Apolar22 generate_apolar_22(const Case22Context& ctx, const ExactForm& g, const BinaryPoint& pencil) {
  if (g.side() != Side::T || g.degree() != DegreeClass{2, 1})
    throw std::invalid_argument("generate_apolar_22: g must be a T-side (2,1) form");
  const auto [g0, g1] = split_u(g);
  {
    // binary quadrics share a factor iff they share a root, possibly at infinity
    const bool both_top_zero = sgn(g0[2]) == 0 && sgn(g1[2]) == 0;
    const QPoly d = poly_gcd(g0, g1);
    if (both_top_zero || d.size() != 1) throw SampleRejected("g0 and g1 share a factor");
  }

  const auto mons = monomials(kRing, {2, 2});
  RationalMatrix sys(mons.size(), 7);
  for (std::size_t r = 0; r < mons.size(); ++r) {
    const auto row = substitute(mons[r], g0, g1);
    for (std::size_t k = 0; k < 7; ++k) sys(r, k) = row[k];
  }
  const auto w = functional_values(ctx.f);
  const auto fc = solve_exact(sys, w);
  if (!fc) throw std::invalid_argument("generate_apolar_22: g is not in I_f(2,1)");

  BinaryDecomposition dec;
  try {
    dec = sylvester_decompose(BinaryDualForm::from_values(*fc), pencil);
  } catch (const DegeneracyError& e) {
    throw SampleRejected(std::string("curve restriction: ") + e.what());
  }
  if (dec.points.size() != 4) throw SampleRejected("curve restriction did not give 4 points");

  std::vector<CoxPoint<Complex>> pts;
  std::vector<Complex> cg0 = to_complex_vec(g0), cg1 = to_complex_vec(g1);
  auto hom_eval = [](const std::vector<Complex>& p, const BinaryPoint& s) {
    Complex acc = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
      acc += p[k] * std::pow(s[0], static_cast<int>(p.size() - 1 - k)) * std::pow(s[1], static_cast<int>(k));
    return acc;
  };
  for (const auto& s : dec.points) pts.push_back({s[0], s[1], hom_eval(cg1, s), -hom_eval(cg0, s)});

  Apolar22 out;
  try {
    out.scheme = make_scheme(kRing, pts, 1e-8);
  } catch (const std::invalid_argument& e) {
    throw SampleRejected(std::string("curve restriction: ") + e.what());
  }
  for (const auto& c : dec.coefficients) out.coefficients.push_back(c * 720.0);
  out.system_residual = 0.0;  // exact solve
  const auto v = is_apolar_values(out.scheme, {2, 2}, to_complex_vec(w), 1e-8);
  out.apolarity_residual = v.span_residual;

  ComplexMatrix img(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      img(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = evaluate(to_float(ctx.basis21[j]), pts[i]);
  out.image_rank = numeric_rank(img, 1e-6);
  return out;
}

PlueckerResult pluecker_vector(const Case22Context& ctx, const FloatScheme& gamma) {
  const ComplexMatrix ev = evaluation_matrix(gamma, {2, 1});
  const ComplexMatrix kernel = numeric_kernel(ev, 1e-8);
  if (kernel.cols() != 2)
    throw SampleRejected("dim I_Gamma(2,1) = " + std::to_string(kernel.cols()) + ", expected 2");
  ComplexMatrix basis(6, 4);
  for (Eigen::Index j = 0; j < 4; ++j) {
    const auto c = ctx.basis21[static_cast<std::size_t>(j)].coefficients();
    for (Eigen::Index i = 0; i < 6; ++i) basis(i, j) = c[static_cast<std::size_t>(i)].get_d();
  }
  PlueckerResult out;
  ComplexMatrix x(4, 2);
  for (Eigen::Index col = 0; col < 2; ++col) {
    const auto ls = least_squares(basis, kernel.col(col));
    x.col(col) = ls.x;
    out.containment_residual = std::max(out.containment_residual, ls.residual_norm / kernel.col(col).norm());
  }
  for (Eigen::Index i = 0; i < 4; ++i) {
    out.coordinates[static_cast<std::size_t>(i)] = x(i, 0);
    out.coordinates[static_cast<std::size_t>(4 + i)] = x(i, 1);
  }
  const std::array<std::array<int, 2>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  double n = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = pairs[k];
    out.p[k] = x(i, 0) * x(j, 1) - x(j, 0) * x(i, 1);
    n += std::norm(out.p[k]);
  }
  n = std::sqrt(n);
  if (n == 0) throw SampleRejected("pencil generators are dependent");
  Complex phase = 1.0;
  for (const auto& z : out.p)
    if (std::abs(z) > 1e-12 * n) {
      phase = std::abs(z) / z;
      break;
    }
  for (auto& z : out.p) z *= phase / n;
  out.relation_residual = std::abs(out.p[0] * out.p[5] - out.p[1] * out.p[4] + out.p[2] * out.p[3]);
  return out;
}

HyperplaneReport hyperplane_section_check(const Case22Context& ctx, std::size_t n_samples, std::uint64_t seed,
                                          Schedule schedule) {
  if (n_samples < 7) throw std::invalid_argument("hyperplane_section_check: need at least 7 samples");
  struct Sample {
    bool ok = false;
    int rejected = 0;
    Apolar22 gamma;
    PlueckerResult pl;
  };
  constexpr int kAttempts = 16;
  const auto samples = run_indexed<Sample>(n_samples, schedule, [&](std::size_t s) {
    Sample out;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(attempt)}));
      ExactForm g(kRing, Side::T, {2, 1});
      for (const auto& b : ctx.basis21) g = g + b.scaled(Rational(uniform_int(rng, -9, 9)));
      const BinaryPoint param{complex_normal(rng), complex_normal(rng)};
      try {
        if (g.is_zero()) throw SampleRejected("zero combination");
        out.gamma = generate_apolar_22(ctx, g, param);
        out.pl = pluecker_vector(ctx, out.gamma.scheme);
        out.ok = true;
        return out;
      } catch (const SampleRejected&) {
        ++out.rejected;
      }
    }
    return out;
  });

  HyperplaneReport rep;
  for (const auto& s : samples) {
    rep.rejected += static_cast<std::size_t>(s.rejected);
    if (!s.ok) throw SampleRejected("hyperplane_section_check: retry budget exhausted");
    rep.vectors.push_back(s.pl.p);
    rep.max_relation_residual = std::max(rep.max_relation_residual, s.pl.relation_residual);
    rep.max_containment_residual = std::max(rep.max_containment_residual, s.pl.containment_residual);
    rep.max_apolarity_residual = std::max(rep.max_apolarity_residual, s.gamma.apolarity_residual);
    rep.all_collinear = rep.all_collinear && s.gamma.image_rank == 2;
  }
  rep.samples = rep.vectors.size();
  ComplexMatrix m(static_cast<Eigen::Index>(rep.samples), 6);
  for (std::size_t i = 0; i < rep.samples; ++i)
    for (std::size_t k = 0; k < 6; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rep.vectors[i][k];
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  rep.numeric_rank = numeric_rank(m, 1e-6);
  rep.gap = sv.size() >= 6 && sv(0) > 0 ? sv(5) / sv(0) : 0.0;
  for (Eigen::Index k = 0; k < 6; ++k) rep.normal[static_cast<std::size_t>(k)] = svd.matrixV()(k, 5);
  return rep;
}

std::vector<Exponent> p3_monomials(int degree) { return monomials(SurfaceRing::p3(), {degree, 0}); }

QuarticReport implicitize_quartic(const std::vector<ExactForm>& maps) {
  if (maps.size() != 4) throw std::invalid_argument("implicitize_quartic: expected 4 forms");
  const SurfaceRing ring = maps[0].ring();
  const DegreeClass d = maps[0].degree();
  auto kernel_in_degree = [&](int e, std::size_t* rows, std::size_t* cols) {
    const auto mons = p3_monomials(e);
    const DegreeClass target{d.a * e, d.b * e};
    std::vector<RationalVector> columns;
    for (const auto& m : mons) {
      ExactForm prod(ring, Side::T, {0, 0});
      prod.add_term({0, 0, 0, 0}, 1);
      for (std::size_t v = 0; v < 4; ++v)
        for (int k = 0; k < m[v]; ++k) prod = multiply(prod, maps[v]);
      columns.push_back(prod.coefficients());
    }
    const std::size_t n = dim(ring, target);
    if (rows) *rows = n;
    if (cols) *cols = mons.size();
    return kernel_exact(RationalMatrix::from_columns(columns, n));
  };
  QuarticReport rep;
  const auto k4 = kernel_in_degree(4, &rep.rows_quartic, &rep.cols_quartic);
  rep.kernel_dim_quartic = k4.size();
  rep.kernel_dim_cubic = kernel_in_degree(3, nullptr, nullptr).size();
  rep.kernel_dim_quadric = kernel_in_degree(2, nullptr, nullptr).size();
  if (k4.size() != 1)
    throw GenericityError("quartic kernel", "quartic kernel has dimension " + std::to_string(k4.size()) + ", expected 1");
  rep.quartic = k4[0];
  return rep;
}

QuarticReport implicitize_quartic(const Case22Context& ctx) { return implicitize_quartic(ctx.basis21); }

// ---- double points of the image ------------------------------------------------

namespace {

struct PlaneCurve {
  std::array<std::vector<Complex>, 4> phi;  // ascending in s, degree 4
};

// D_ij(s, s') = (phi_i(s) phi_j(s') - phi_j(s) phi_i(s')) / (s - s') and the
// partial derivatives in s and s'.
struct NodeSystem {
  explicit NodeSystem(const PlaneCurve& c) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        std::array<std::array<Complex, 5>, 5> m{};
        for (std::size_t a = 0; a < 5; ++a)
          for (std::size_t b = 0; b < 5; ++b) m[a][b] = c.phi[i][a] * c.phi[j][b] - c.phi[j][a] * c.phi[i][b];
        coeff.push_back(m);
      }
  }

  // value and derivatives of (s^a s'^b - s^b s'^a)/(s - s') for a > b
  static void term(int a, int b, Complex s, Complex t, Complex& v, Complex& ds, Complex& dt) {
    v = ds = dt = 0;
    for (int k = 0; k <= a - b - 1; ++k) {
      const int ps = b + k;
      const int pt = a - 1 - k;
      v += std::pow(s, ps) * std::pow(t, pt);
      if (ps > 0) ds += static_cast<double>(ps) * std::pow(s, ps - 1) * std::pow(t, pt);
      if (pt > 0) dt += static_cast<double>(pt) * std::pow(s, ps) * std::pow(t, pt - 1);
    }
  }

  void eval(Complex s, Complex t, Eigen::VectorXcd& r, Eigen::MatrixXcd& j) const {
    r = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(coeff.size()));
    j = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(coeff.size()), 2);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < a; ++b) {
        Complex v, ds, dt;
        term(a, b, s, t, v, ds, dt);
        for (std::size_t q = 0; q < coeff.size(); ++q) {
          const Complex c = coeff[q][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          r(static_cast<Eigen::Index>(q)) += c * v;
          j(static_cast<Eigen::Index>(q), 0) += c * ds;
          j(static_cast<Eigen::Index>(q), 1) += c * dt;
        }
      }
  }

  std::vector<std::array<std::array<Complex, 5>, 5>> coeff;
};

std::array<Complex, 4> unit(const std::array<Complex, 4>& v) {
  double n = 0;
  for (const auto& z : v) n += std::norm(z);
  n = std::sqrt(n);
  std::array<Complex, 4> out;
  // fix the phase by the largest entry
  std::size_t big = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(v[i]) > std::abs(v[big])) big = i;
  const Complex phase = std::abs(v[big]) / v[big];
  for (std::size_t i = 0; i < 4; ++i) out[i] = v[i] * phase / n;
  return out;
}

double projective_distance(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  Complex ip = 0;
  double na = 0, nb = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ip += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  const double c = std::min(1.0, std::abs(ip) / std::sqrt(na * nb));
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

std::array<Complex, 4> eval_phi(const PlaneCurve& c, Complex s) {
  std::array<Complex, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = poly_eval(c.phi[i], s);
  return v;
}

}  // namespace

DoubleCurveReport double_curve_probe(const Case22Context& ctx, const QuarticReport& quartic, std::size_t n_points,
                                      std::uint64_t seed, std::size_t max_planes) {
  std::vector<FloatForm> maps;
  for (const auto& b : ctx.basis21) maps.push_back(to_float(b));

  DoubleCurveReport rep;
  for (std::size_t plane = 0; plane < max_planes && rep.points.size() < n_points; ++plane) {
    ++rep.planes_used;
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(plane)}));
    FloatForm g(kRing, Side::T, {2, 1});
    for (const auto& m : maps) g = g + m.scaled(complex_normal(rng));
    const auto [g0, g1] = split_u(g);
    PlaneCurve curve;
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<Complex> phi(5, 0.0);
      for (const auto& [e, c] : maps[i].terms()) {
        const auto sub = substitute(e, g0, g1);
        for (std::size_t k = 0; k < 5; ++k) phi[k] += c * sub[k];
      }
      curve.phi[i] = phi;
    }
    double scale = 0;
    for (const auto& p : curve.phi)
      for (const auto& z : p) scale = std::max(scale, std::abs(z));
    for (auto& p : curve.phi)
      for (auto& z : p) z /= scale;

    const NodeSystem sys(curve);
    std::vector<std::array<Complex, 4>> nodes;
    for (int start = 0; start < 40 && nodes.size() < 3; ++start) {
      Complex s = complex_normal(rng), t = complex_normal(rng);
      Eigen::VectorXcd r;
      Eigen::MatrixXcd j;
      double lambda = 1e-3;
      sys.eval(s, t, r, j);
      double res = r.norm();
      for (int it = 0; it < 200 && res > 1e-14; ++it) {
        const Eigen::Matrix2cd a = j.adjoint() * j;
        const Eigen::Vector2cd gvec = j.adjoint() * r;
        bool accepted = false;
        for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
          Eigen::Matrix2cd damped = a;
          damped.diagonal().array() += lambda * std::max(a.diagonal().real().maxCoeff(), 1e-300);
          const Eigen::Vector2cd delta = damped.ldlt().solve(-gvec);
          Eigen::VectorXcd r2;
          Eigen::MatrixXcd j2;
          sys.eval(s + delta(0), t + delta(1), r2, j2);
          if (std::isfinite(r2.norm()) && r2.norm() < res) {
            s += delta(0);
            t += delta(1);
            r = r2;
            j = j2;
            res = r2.norm();
            lambda = std::max(lambda * 0.1, 1e-15);
            accepted = true;
          } else {
            lambda *= 10;
          }
        }
        if (!accepted) break;
      }
      if (!(res < 1e-11) || std::abs(s - t) < 1e-4 || std::abs(s) > 1e6 || std::abs(t) > 1e6) continue;
      const auto ps = eval_phi(curve, s);
      const auto pt = eval_phi(curve, t);
      const double pair = projective_distance(ps, pt);
      if (pair > 1e-8) continue;
      const auto u = unit(ps);
      bool dup = false;
      for (const auto& q : nodes)
        if (projective_distance(q, u) < 1e-6) dup = true;
      for (const auto& q : rep.points)
        if (projective_distance(q, u) < 1e-6) dup = true;
      if (dup) continue;
      nodes.push_back(u);
      rep.max_pair_residual = std::max(rep.max_pair_residual, pair);
    }
    rep.points.insert(rep.points.end(), nodes.begin(), nodes.end());
  }
  if (rep.points.size() < n_points)
    throw SampleRejected("double_curve_probe: found " + std::to_string(rep.points.size()) + " double points");

  const auto q2 = p3_monomials(2);
  auto quadric_kernel = [&](const std::vector<std::array<Complex, 4>>& pts) {
    ComplexMatrix m(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(q2.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t k = 0; k < q2.size(); ++k)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = monomial_value(q2[k], pts[i]);
    return q2.size() - numeric_rank(m, 1e-8);
  };
  rep.quadric_dim = quadric_kernel(rep.points);

  // control: one ordinary point of the image
  Rng rng(derive_seed(seed, {0xC0u}));
  CoxPoint<Complex> p{complex_normal(rng), complex_normal(rng), complex_normal(rng), complex_normal(rng)};
  std::array<Complex, 4> img;
  for (std::size_t i = 0; i < 4; ++i) img[i] = evaluate(maps[i], p);
  auto with_control = rep.points;
  with_control.push_back(unit(img));
  rep.quadric_dim_control = quadric_kernel(with_control);

  // gradient of the normalized quartic at the points
  const auto q4 = p3_monomials(4);
  std::vector<Complex> qc = to_complex_vec(quartic.quartic);
  const double qn = cnorm(qc);
  for (auto& z : qc) z /= qn;
  for (const auto& x : rep.points) {
    double g2 = 0;
    for (std::size_t v = 0; v < 4; ++v) {
      Complex d = 0;
      for (std::size_t k = 0; k < q4.size(); ++k) {
        Exponent e = q4[k];
        if (e[v] == 0) continue;
        const double mult = e[v];
        --e[v];
        d += qc[k] * mult * monomial_value(e, x);
      }
      g2 += std::norm(d);
    }
    rep.max_gradient = std::max(rep.max_gradient, std::sqrt(g2));
  }
  return rep;
}

std::pair<ExactForm, int> general_form_22(std::uint64_t seed, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const auto f = random_form(kRing, Side::S, {2, 2}, derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    try {
      build_context(f);
      if (!check_partials_not_split(f).ok()) continue;
      return {f, attempt};
    } catch (const GenericityError&) {
    }
  }
  throw GenericityError("general form", "no general (2,2) form within the attempt budget");
}

}  // namespace apolar
