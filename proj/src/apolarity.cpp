#include "apolar/apolarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace apolar {

namespace {

Exponent add(const Exponent& x, const Exponent& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

template <class Scalar>
std::map<Exponent, Scalar, std::greater<Exponent>> value_map(const MultiForm<Scalar>& f) {
  std::map<Exponent, Scalar, std::greater<Exponent>> out;
  const auto mons = monomials(f.ring(), f.degree());
  const auto vals = functional_values(f);
  for (std::size_t i = 0; i < mons.size(); ++i) out.emplace(mons[i], vals[i]);
  return out;
}

void require_s_side(const SurfaceRing&, Side side) {
  if (side != Side::S) throw std::invalid_argument("expected a form on the S side");
}

double vector_norm(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

Catalecticant catalecticant(const ExactForm& f, DegreeClass b) {
  require_s_side(f.ring(), f.side());
  Catalecticant c;
  c.degree = b;
  c.target = f.degree() - b;
  c.col_labels = monomials(f.ring(), b);
  c.row_labels = monomials(f.ring(), c.target);
  c.matrix = RationalMatrix(c.row_labels.size(), c.col_labels.size());
  if (c.row_labels.empty() || c.col_labels.empty()) return c;
  const auto vals = value_map(f);
  for (std::size_t i = 0; i < c.row_labels.size(); ++i)
    for (std::size_t j = 0; j < c.col_labels.size(); ++j)
      c.matrix(i, j) = vals.at(add(c.row_labels[i], c.col_labels[j]));
  return c;
}

ComplexMatrix catalecticant_matrix(const FloatForm& f, DegreeClass b) {
  require_s_side(f.ring(), f.side());
  const auto cols = monomials(f.ring(), b);
  const auto rows = monomials(f.ring(), f.degree() - b);
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  if (rows.empty() || cols.empty()) return m;
  const auto vals = value_map(f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vals.at(add(rows[i], cols[j]));
  return m;
}

std::vector<RationalVector> orthogonal_component(const ExactForm& f, DegreeClass b) {
  const std::size_t n = dim(f.ring(), b);
  if (n == 0) return {};
  if (!f.ring().is_effective(f.degree() - b)) {
    std::vector<RationalVector> out(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
  }
  return kernel_exact(catalecticant(f, b).matrix);
}

std::vector<ExactForm> orthogonal_component_forms(const ExactForm& f, DegreeClass b) {
  std::vector<ExactForm> out;
  for (const auto& v : orthogonal_component(f, b))
    out.push_back(ExactForm::from_coefficients(f.ring(), Side::T, b, v));
  return out;
}

std::vector<RationalVector> multiply_span(const SurfaceRing& ring, DegreeClass c_minus_b,
                                          DegreeClass b, const std::vector<RationalVector>& basis) {
  const auto shifts = monomials(ring, c_minus_b);
  const auto src = monomials(ring, b);
  const DegreeClass c = c_minus_b + b;
  const auto dst = monomials(ring, c);
  std::map<Exponent, std::size_t, std::greater<Exponent>> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
  std::vector<RationalVector> out;
  out.reserve(shifts.size() * basis.size());
  for (const auto& m : shifts)
    for (const auto& g : basis) {
      RationalVector v(dst.size(), Rational(0));
      for (std::size_t k = 0; k < src.size(); ++k)
        if (sgn(g[k]) != 0) v[index.at(add(m, src[k]))] += g[k];
      out.push_back(std::move(v));
    }
  return out;
}

const GenerationEntry* GenerationReport::find(DegreeClass d) const {
  for (const auto& e : entries)
    if (e.degree == d) return &e;
  return nullptr;
}

GenerationReport generation_check(const ExactForm& f, const std::vector<DegreeClass>& generators) {
  const SurfaceRing& ring = f.ring();
  const DegreeClass a = f.degree();
  std::map<DegreeClass, std::vector<RationalVector>> gen_basis;
  for (const auto& g : generators) gen_basis[g] = orthogonal_component(f, g);

  GenerationReport report;
  for (int ca = 0; ca <= a.a + 1; ++ca)
    for (int cb = 0; cb <= a.b + 1; ++cb) {
      const DegreeClass c{ca, cb};
      if (!ring.is_effective(c)) continue;
      const std::size_t n = dim(ring, c);
      if (n == 0) continue;
      GenerationEntry entry;
      entry.degree = c;
      const auto target = orthogonal_component(f, c);
      entry.dim_orthogonal = target.size();
      std::vector<RationalVector> produced;
      for (const auto& [g, basis] : gen_basis) {
        if (g == c) entry.is_generator_degree = true;
        const DegreeClass shift = c - g;
        if (!ring.is_effective(shift) || dim(ring, shift) == 0) continue;
        auto part = multiply_span(ring, shift, g, basis);
        produced.insert(produced.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
      }
      entry.dim_generated = produced.empty() ? 0 : span_rank(produced, n);
      // Ideal property makes produced a subspace of I_{f,C}; equality is then a
      // dimension count, but containment is checked as well.
      const bool contained = produced.empty() || span_contains(target, produced, n);
      entry.ok = contained && entry.dim_generated == entry.dim_orthogonal;
      report.all_ok = report.all_ok && entry.ok;
      report.entries.push_back(entry);
    }
  return report;
}

// ---------------------------------------------------------------------------

ExactScheme make_scheme(const SurfaceRing& ring, std::vector<CoxPoint<Rational>> points) {
  const DegreeClass h = ring.comparison_class();
  std::vector<RationalVector> nus;
  for (const auto& p : points) {
    if (in_irrelevant_locus(ring, p)) throw std::invalid_argument("scheme point lies in the irrelevant locus");
    nus.push_back(evaluation_vector(ring, h, p));
  }
  const std::size_t n = dim(ring, h);
  for (std::size_t i = 0; i < nus.size(); ++i)
    for (std::size_t j = i + 1; j < nus.size(); ++j)
      if (span_rank({nus[i], nus[j]}, n) < 2)
        throw std::invalid_argument("scheme points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
  return ExactScheme{ring, std::move(points)};
}

FloatScheme make_scheme(const SurfaceRing& ring, std::vector<CoxPoint<Complex>> points, double tol) {
  for (const auto& p : points) {
    for (const auto& z : p)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("scheme point has a non-finite coordinate");
    if (in_irrelevant_locus(ring, p)) throw std::invalid_argument("scheme point lies in the irrelevant locus");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (point_distance(ring, points[i], points[j]) <= tol)
        throw std::invalid_argument("scheme points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
  return FloatScheme{ring, std::move(points)};
}

FloatScheme to_float(const ExactScheme& s) {
  FloatScheme out{s.ring, {}};
  for (const auto& p : s.points) out.points.push_back(to_complex_point(p));
  return out;
}

RationalMatrix evaluation_matrix(const ExactScheme& s, DegreeClass b) {
  std::vector<RationalVector> rows;
  for (const auto& p : s.points) rows.push_back(evaluation_vector(s.ring, b, p));
  if (rows.empty()) return RationalMatrix(0, dim(s.ring, b));
  return RationalMatrix::from_rows(rows);
}

ComplexMatrix evaluation_matrix(const FloatScheme& s, DegreeClass b) {
  const std::size_t n = dim(s.ring, b);
  ComplexMatrix m(static_cast<Eigen::Index>(s.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto v = evaluation_vector(s.ring, b, s.points[i]);
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[j];
  }
  return m;
}

std::vector<RationalVector> scheme_ideal_component(const ExactScheme& s, DegreeClass b) {
  const std::size_t n = dim(s.ring, b);
  if (n == 0) return {};
  if (s.size() == 0) {
    std::vector<RationalVector> out(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
  }
  return kernel_exact(evaluation_matrix(s, b));
}

ComplexMatrix scheme_ideal_component(const FloatScheme& s, DegreeClass b, double tau) {
  const auto n = static_cast<Eigen::Index>(dim(s.ring, b));
  if (s.size() == 0) return ComplexMatrix::Identity(n, n);
  return numeric_kernel(evaluation_matrix(s, b), tau);
}

ApolarityVerdict is_apolar(const ExactScheme& s, const ExactForm& f) {
  if (!(s.ring == f.ring())) throw std::invalid_argument("is_apolar: ring mismatch");
  require_s_side(f.ring(), f.side());
  const DegreeClass a = f.degree();
  const auto w = functional_values(f);
  ApolarityVerdict v;
  v.ideal_test = true;
  for (const auto& g : scheme_ideal_component(s, a))
    if (sgn(dot(g, w)) != 0) {
      v.ideal_test = false;
      break;
    }
  const std::size_t n = dim(s.ring, a);
  std::vector<RationalVector> nus;
  for (const auto& p : s.points) nus.push_back(evaluation_vector(s.ring, a, p));
  v.span_test = span_contains(nus, {w}, n);
  v.tests_agree = v.ideal_test == v.span_test;
  if (!v.tests_agree) throw std::logic_error("is_apolar: ideal test and span test disagree");
  v.apolar = v.ideal_test;
  v.ideal_residual = v.span_residual = v.apolar ? 0.0 : 1.0;
  return v;
}

ApolarityVerdict is_apolar_values(const FloatScheme& s, DegreeClass a, const std::vector<Complex>& values,
                                  double tol, double rank_tau) {
  const std::size_t n = dim(s.ring, a);
  if (values.size() != n) throw std::invalid_argument("is_apolar: value vector has the wrong length");
  const double wn = vector_norm(values);
  ApolarityVerdict v;
  if (wn == 0.0) {
    v.apolar = v.ideal_test = v.span_test = true;
    return v;
  }
  ComplexVector w(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) w(static_cast<Eigen::Index>(i)) = values[i];

  const ComplexMatrix kernel = scheme_ideal_component(s, a, rank_tau);
  v.ideal_residual = kernel.cols() == 0 ? 0.0 : (kernel.transpose() * w).norm() / wn;

  if (s.size() == 0) {
    v.span_residual = 1.0;
  } else {
    const ComplexMatrix vt = evaluation_matrix(s, a).transpose();
    v.span_residual = least_squares(vt, w).residual_norm / wn;
  }
  v.ideal_test = v.ideal_residual <= tol;
  v.span_test = v.span_residual <= tol;
  v.tests_agree = v.ideal_test == v.span_test;
  if (!v.tests_agree && std::abs(v.ideal_residual - v.span_residual) > tol)
    throw std::logic_error("is_apolar: ideal test and span test disagree beyond tolerance");
  v.apolar = v.ideal_test && v.span_test;
  return v;
}

ApolarityVerdict is_apolar(const FloatScheme& s, const FloatForm& f, double tol, double rank_tau) {
  if (!(s.ring == f.ring())) throw std::invalid_argument("is_apolar: ring mismatch");
  require_s_side(f.ring(), f.side());
  return is_apolar_values(s, f.degree(), functional_values(f), tol, rank_tau);
}

std::vector<DegreeClass> degrees_below(const SurfaceRing& ring, DegreeClass a) {
  std::vector<DegreeClass> out;
  for (int x = 0; x <= a.a; ++x)
    for (int y = 0; y <= a.b; ++y) {
      const DegreeClass b{x, y};
      if (ring.is_effective(b) && ring.is_effective(a - b) && dim(ring, b) > 0) out.push_back(b);
    }
  return out;
}

ApolarityLemmaResult apolarity_lemma_check(const ExactScheme& s, const ExactForm& f) {
  const DegreeClass a = f.degree();
  ApolarityLemmaResult r;
  r.ideal_containment = true;
  for (const auto& b : degrees_below(s.ring, a)) {
    const auto ideal = scheme_ideal_component(s, b);
    if (ideal.empty()) continue;
    const auto cat = catalecticant(f, b);
    bool ok = true;
    for (const auto& g : ideal)
      if (!is_zero(cat.matrix * g)) {
        ok = false;
        break;
      }
    if (!ok) {
      r.ideal_containment = false;
      if (!r.first_failure) r.first_failure = b;
    }
  }
  const auto w = functional_values(f);
  r.degree_a_containment = true;
  for (const auto& g : scheme_ideal_component(s, a))
    if (sgn(dot(g, w)) != 0) {
      r.degree_a_containment = false;
      break;
    }
  r.equivalent = r.ideal_containment == r.degree_a_containment;
  return r;
}

}  // namespace apolar
