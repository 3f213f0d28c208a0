#include "apolar/binary_sylvester.hpp"

#include <algorithm>
#include <cmath>

namespace apolar {

namespace {

double factorial(int d) {
  double r = 1;
  for (int i = 2; i <= d; ++i) r *= i;
  return r;
}

// Roots of sum_j g_j s0^(k-j) s1^j as points of P^1.
std::vector<BinaryPoint> binary_roots(const std::vector<Complex>& g) {
  const auto r = roots_univariate(g, 1e-12);
  std::vector<BinaryPoint> pts;
  for (const auto& z : r.roots) pts.push_back(normalize_binary({1.0, z}));
  for (std::size_t i = 0; i < r.at_infinity; ++i) pts.push_back({0.0, 1.0});
  return pts;
}

// Points of `pts` closer than tol to another one.
std::vector<BinaryPoint> clustered(const std::vector<BinaryPoint>& pts, double tol) {
  std::vector<BinaryPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (binary_point_distance(pts[i], pts[j]) < tol) {
        out.push_back(pts[i]);
        break;
      }
  return out;
}

// Ascending coefficients of prod (p1 s0 - p0 s1) over the given points, in s = s1/s0.
std::vector<Complex> form_of(const std::vector<BinaryPoint>& pts) {
  std::vector<Complex> c{1.0};
  for (const auto& p : pts) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += p[1] * c[i];
      next[i + 1] -= p[0] * c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

BinaryDualForm BinaryDualForm::from_values(std::vector<Complex> values) {
  if (values.empty()) throw std::invalid_argument("binary dual form needs at least one value");
  BinaryDualForm f;
  f.degree = static_cast<int>(values.size()) - 1;
  f.values = std::move(values);
  return f;
}

BinaryDualForm BinaryDualForm::from_values(const std::vector<Rational>& values) {
  std::vector<Complex> v;
  v.reserve(values.size());
  for (const auto& q : values) v.emplace_back(q.get_d(), 0.0);
  return from_values(std::move(v));
}

ComplexMatrix binary_catalecticant(const BinaryDualForm& f, int k) {
  if (k < 0 || k > f.degree) throw std::invalid_argument("binary_catalecticant: k out of range");
  ComplexMatrix h(f.degree - k + 1, k + 1);
  for (int i = 0; i <= f.degree - k; ++i)
    for (int j = 0; j <= k; ++j) h(i, j) = f.values[static_cast<std::size_t>(i + j)];
  return h;
}

RationalMatrix binary_catalecticant(const std::vector<Rational>& values, int k) {
  const int d = static_cast<int>(values.size()) - 1;
  if (k < 0 || k > d) throw std::invalid_argument("binary_catalecticant: k out of range");
  RationalMatrix h(static_cast<std::size_t>(d - k + 1), static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= d - k; ++i)
    for (int j = 0; j <= k; ++j)
      h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = values[static_cast<std::size_t>(i + j)];
  return h;
}

BinaryDualForm reconstruct(const std::vector<BinaryPoint>& points, const std::vector<Complex>& coeffs,
                           int degree) {
  if (points.size() != coeffs.size()) throw std::invalid_argument("reconstruct: size mismatch");
  std::vector<Complex> v(static_cast<std::size_t>(degree + 1), 0.0);
  const double df = factorial(degree);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (int k = 0; k <= degree; ++k)
      v[static_cast<std::size_t>(k)] +=
          coeffs[i] * df * std::pow(points[i][0], degree - k) * std::pow(points[i][1], k);
  return BinaryDualForm::from_values(std::move(v));
}

BinaryPoint normalize_binary(const BinaryPoint& p) {
  if (std::abs(p[0]) >= std::abs(p[1])) {
    if (p[0] == Complex(0.0)) throw std::domain_error("normalize_binary: zero point");
    return {1.0, p[1] / p[0]};
  }
  return {p[0] / p[1], 1.0};
}

double binary_point_distance(const BinaryPoint& p, const BinaryPoint& q) {
  const double np = std::sqrt(std::norm(p[0]) + std::norm(p[1]));
  const double nq = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
  return std::abs(p[0] * q[1] - p[1] * q[0]) / (np * nq);
}

double point_set_distance(const std::vector<BinaryPoint>& a, const std::vector<BinaryPoint>& b) {
  auto one_way = [](const std::vector<BinaryPoint>& x, const std::vector<BinaryPoint>& y) {
    double worst = 0;
    for (const auto& p : x) {
      double best = 1e300;
      for (const auto& q : y) best = std::min(best, binary_point_distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

double relative_error(const BinaryDualForm& a, const BinaryDualForm& b) {
  if (a.degree != b.degree) throw std::invalid_argument("relative_error: degree mismatch");
  double num = 0, den = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    num += std::norm(a.values[i] - b.values[i]);
    den += std::norm(b.values[i]);
  }
  return den == 0 ? std::sqrt(num) : std::sqrt(num / den);
}

BinaryDecomposition sylvester_decompose(const BinaryDualForm& f, std::optional<BinaryPoint> pencil,
                                        const SylvesterOptions& opts) {
  const int d = f.degree;
  if (d < 1) throw std::invalid_argument("sylvester_decompose: degree must be positive");
  double scale = 0;
  for (const auto& v : f.values) scale = std::max(scale, std::abs(v));
  if (scale == 0) throw std::invalid_argument("sylvester_decompose: zero form");

  for (int k = 1; k <= d; ++k) {
    const ComplexMatrix ker = numeric_kernel(binary_catalecticant(f, k), opts.rank_tol);
    if (ker.cols() == 0) continue;

    std::vector<Complex> g(static_cast<std::size_t>(k + 1));
    const bool is_pencil = ker.cols() >= 2;
    if (is_pencil) {
      const BinaryPoint lm = pencil.value_or(kDefaultPencilParameter);
      const ComplexVector member = lm[0] * ker.col(0) + lm[1] * ker.col(1);
      for (int j = 0; j <= k; ++j) g[static_cast<std::size_t>(j)] = member(j);
    } else {
      for (int j = 0; j <= k; ++j) g[static_cast<std::size_t>(j)] = ker(j, 0);
    }

    const auto pts = binary_roots(g);
    const auto bad = clustered(pts, opts.root_separation);
    if (!bad.empty()) {
      // A unique annihilator with a double root means the rank is larger.
      if (!is_pencil) continue;
      throw DegeneracyError("sylvester_decompose: selected kernel form is not square-free",
                            form_of(bad));
    }

    ComplexMatrix v(d + 1, static_cast<Eigen::Index>(pts.size()));
    const double df = factorial(d);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (int m = 0; m <= d; ++m)
        v(m, static_cast<Eigen::Index>(i)) = df * std::pow(pts[i][0], d - m) * std::pow(pts[i][1], m);
    ComplexVector rhs(d + 1);
    for (int m = 0; m <= d; ++m) rhs(m) = f.values[static_cast<std::size_t>(m)];
    const auto ls = least_squares(v, rhs);

    BinaryDecomposition out;
    out.points = pts;
    out.coefficients.assign(ls.x.data(), ls.x.data() + ls.x.size());
    out.k = k;
    out.kernel_dim = static_cast<std::size_t>(ker.cols());
    out.kernel_form = g;
    out.residual = relative_error(reconstruct(out.points, out.coefficients, d), f);
    return out;
  }
  throw std::logic_error("sylvester_decompose: no annihilating form found");
}

}  // namespace apolar
