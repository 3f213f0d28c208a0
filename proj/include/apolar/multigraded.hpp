#pragma once

// Cox rings of P1xP1 and of the Hirzebruch surface F1 as Z^2-graded
// polynomial rings in four variables, and the dual ring acting on them by
// differentiation.
//
//   P1xP1:  t0, t1 -> (1,0)          u0, u1 -> (0,1)
//   F1:     t0 -> E = (1,0)          t1 -> E+F = (1,1)      u0, u1 -> F = (0,1)
//   P3:     z0..z3 -> (1,0)          (ambient ring of the cubic lift only)
//
// The T side holds sections (t, u); the S side holds the dual variables
// (x, y), with t_i acting as d/dx_i and u_i as d/dy_i. No divided powers:
// t^a applied to x^b gives b!/(b-a)! x^(b-a).
//
// Monomials are ordered lexicographically descending on the exponent vector
// (e_t0, e_t1, e_u0, e_u1) everywhere, so matrices built from forms are
// reproducible entry-for-entry.

#include "apolar/exact.hpp"
#include "apolar/numeric.hpp"
#include "apolar/seed.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace apolar {

enum class Surface { P1xP1, F1, P3 };
enum class Side { T, S };

/// Bidegree (a,b) on P1xP1, class aE+bF on F1, degree a on P3 (b = 0).
struct DegreeClass {
  int a = 0;
  int b = 0;
  friend DegreeClass operator+(DegreeClass x, DegreeClass y) { return {x.a + y.a, x.b + y.b}; }
  friend DegreeClass operator-(DegreeClass x, DegreeClass y) { return {x.a - y.a, x.b - y.b}; }
  friend auto operator<=>(const DegreeClass&, const DegreeClass&) = default;
};

std::string to_string(DegreeClass d);

using Exponent = std::array<int, 4>;
template <class Scalar>
using CoxPoint = std::array<Scalar, 4>;

class SurfaceRing {
 public:
  static SurfaceRing p1xp1() { return SurfaceRing(Surface::P1xP1); }
  static SurfaceRing f1() { return SurfaceRing(Surface::F1); }
  static SurfaceRing p3() { return SurfaceRing(Surface::P3); }
  /// Accepts "p1xp1", "f1", "p3".
  static SurfaceRing from_name(std::string_view name);

  Surface surface() const { return surface_; }
  std::string name() const;
  std::array<int, 2> weight(std::size_t var) const;
  DegreeClass degree_of(const Exponent& e) const;
  /// T_D is nonzero.
  bool is_effective(DegreeClass d) const;
  std::string variable(Side side, std::size_t var) const;
  /// Ample class used to compare points independently of Cox representatives.
  DegreeClass comparison_class() const;

  friend bool operator==(const SurfaceRing&, const SurfaceRing&) = default;

 private:
  explicit SurfaceRing(Surface s) : surface_(s) {}
  Surface surface_;
};

/// Monomials of degree d in lex-descending order; empty for non-effective d.
std::vector<Exponent> monomials(const SurfaceRing& ring, DegreeClass d);
inline std::vector<Exponent> monomials(const SurfaceRing& ring, Side, DegreeClass d) {
  return monomials(ring, d);
}
std::size_t dim(const SurfaceRing& ring, DegreeClass d);
/// Position of e in monomials(ring, degree_of(e)).
std::size_t monomial_index(const SurfaceRing& ring, DegreeClass d, const Exponent& e);

/// prod e_i!
long exponent_factorial(const Exponent& e);
std::string monomial_string(const SurfaceRing& ring, Side side, const Exponent& e);

// ---------------------------------------------------------------------------
// scalar helpers

inline bool scalar_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool scalar_is_zero(const Complex& z) { return z == Complex(0.0); }
inline Complex to_complex(const Rational& q) { return Complex(q.get_d(), 0.0); }
inline Complex to_complex(const Complex& z) { return z; }

template <class Scalar>
Scalar scalar_pow(const Scalar& x, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

template <class Scalar>
Scalar monomial_value(const Exponent& e, const CoxPoint<Scalar>& p) {
  Scalar r(1);
  for (std::size_t i = 0; i < 4; ++i)
    if (e[i] > 0) r *= scalar_pow(p[i], e[i]);
  return r;
}

// ---------------------------------------------------------------------------
// forms

template <class Scalar>
class MultiForm {
 public:
  using TermMap = std::map<Exponent, Scalar, std::greater<Exponent>>;

  MultiForm(SurfaceRing ring, Side side, DegreeClass degree)
      : ring_(ring), side_(side), degree_(degree) {}

  /// Coefficients listed in the ring's monomial order for `degree`.
  static MultiForm from_coefficients(SurfaceRing ring, Side side, DegreeClass degree,
                                     const std::vector<Scalar>& coeffs) {
    const auto mons = monomials(ring, degree);
    if (coeffs.size() != mons.size()) throw std::invalid_argument("from_coefficients: wrong length");
    MultiForm f(ring, side, degree);
    for (std::size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], coeffs[i]);
    return f;
  }

  const SurfaceRing& ring() const { return ring_; }
  Side side() const { return side_; }
  DegreeClass degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Scalar& c) {
    for (int v : e)
      if (v < 0) throw std::invalid_argument("negative exponent");
    if (ring_.degree_of(e) != degree_)
      throw std::invalid_argument("term degree does not match the form degree");
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  std::vector<Scalar> coefficients() const {
    const auto mons = monomials(ring_, degree_);
    std::vector<Scalar> out;
    out.reserve(mons.size());
    for (const auto& m : mons) out.push_back(coefficient(m));
    return out;
  }

  MultiForm scaled(const Scalar& s) const {
    MultiForm out(ring_, side_, degree_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  friend MultiForm operator+(const MultiForm& x, const MultiForm& y) {
    x.require_compatible(y);
    if (x.degree_ != y.degree_) throw std::invalid_argument("sum of forms of different degrees");
    MultiForm out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiForm operator-(const MultiForm& x, const MultiForm& y) {
    return x + y.scaled(Scalar(-1));
  }
  friend bool operator==(const MultiForm& x, const MultiForm& y) {
    return x.ring_ == y.ring_ && x.side_ == y.side_ && x.degree_ == y.degree_ && x.terms_ == y.terms_;
  }

  void require_compatible(const MultiForm& other) const {
    if (!(ring_ == other.ring_)) throw std::invalid_argument("forms live in different rings");
    if (side_ != other.side_) throw std::invalid_argument("forms live on different sides");
  }

 private:
  SurfaceRing ring_;
  Side side_;
  DegreeClass degree_;
  TermMap terms_;
};

using ExactForm = MultiForm<Rational>;
using FloatForm = MultiForm<Complex>;

template <class Scalar>
MultiForm<Scalar> multiply(const MultiForm<Scalar>& g, const MultiForm<Scalar>& h) {
  g.require_compatible(h);
  MultiForm<Scalar> out(g.ring(), g.side(), g.degree() + h.degree());
  for (const auto& [e1, c1] : g.terms())
    for (const auto& [e2, c2] : h.terms())
      out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
  return out;
}

/// g (in T_B) acting on f (in S_A) by differentiation; the result lies in S_{A-B}.
template <class Scalar>
MultiForm<Scalar> diff_apply(const MultiForm<Scalar>& g, const MultiForm<Scalar>& f) {
  if (!(g.ring() == f.ring())) throw std::invalid_argument("diff_apply: ring mismatch");
  if (g.side() != Side::T || f.side() != Side::S)
    throw std::invalid_argument("diff_apply: operator must be on the T side and f on the S side");
  MultiForm<Scalar> out(f.ring(), Side::S, f.degree() - g.degree());
  for (const auto& [a, ca] : g.terms())
    for (const auto& [b, cb] : f.terms()) {
      Exponent r{};
      long factor = 1;
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i) {
        r[i] = b[i] - a[i];
        if (r[i] < 0) ok = false;
        for (int k = 0; ok && k < a[i]; ++k) factor *= (b[i] - k);
      }
      if (ok) out.add_term(r, ca * cb * Scalar(static_cast<long>(factor)));
    }
  return out;
}

/// Scalar g(f) for g in T_A, f in S_A.
template <class Scalar>
Scalar pairing(const MultiForm<Scalar>& g, const MultiForm<Scalar>& f) {
  if (g.degree() != f.degree()) throw std::invalid_argument("pairing: degree mismatch");
  return diff_apply(g, f).coefficient({0, 0, 0, 0});
}

/// Values of f on the T-monomials of its degree: alpha! * coefficient(alpha).
/// In these coordinates the catalecticant is a Hankel-type matrix and a sum
/// of point evaluations is a plain linear combination of evaluation vectors.
template <class Scalar>
std::vector<Scalar> functional_values(const MultiForm<Scalar>& f) {
  const auto mons = monomials(f.ring(), f.degree());
  std::vector<Scalar> out;
  out.reserve(mons.size());
  for (const auto& m : mons) out.push_back(f.coefficient(m) * Scalar(exponent_factorial(m)));
  return out;
}

template <class Scalar>
MultiForm<Scalar> from_functional_values(SurfaceRing ring, DegreeClass degree,
                                         const std::vector<Scalar>& values) {
  const auto mons = monomials(ring, degree);
  if (values.size() != mons.size()) throw std::invalid_argument("from_functional_values: length");
  MultiForm<Scalar> f(ring, Side::S, degree);
  for (std::size_t i = 0; i < mons.size(); ++i)
    f.add_term(mons[i], values[i] / Scalar(exponent_factorial(mons[i])));
  return f;
}

/// True when the point lies in the irrelevant locus of the Cox quotient.
template <class Scalar>
bool in_irrelevant_locus(const SurfaceRing& ring, const CoxPoint<Scalar>& p) {
  const bool t_zero = scalar_is_zero(p[0]) && scalar_is_zero(p[1]);
  const bool u_zero = scalar_is_zero(p[2]) && scalar_is_zero(p[3]);
  if (ring.surface() == Surface::P3) return t_zero && u_zero;
  return t_zero || u_zero;
}

template <class Scalar>
Scalar evaluate(const MultiForm<Scalar>& form, const CoxPoint<Scalar>& p) {
  if (in_irrelevant_locus(form.ring(), p))
    throw std::invalid_argument("evaluate: point lies in the irrelevant locus");
  Scalar acc(0);
  for (const auto& [e, c] : form.terms()) acc += c * monomial_value(e, p);
  return acc;
}

/// nu_D(p): the values of all degree-D monomials at p.
template <class Scalar>
std::vector<Scalar> evaluation_vector(const SurfaceRing& ring, DegreeClass d, const CoxPoint<Scalar>& p) {
  const auto mons = monomials(ring, d);
  std::vector<Scalar> out;
  out.reserve(mons.size());
  for (const auto& m : mons) out.push_back(monomial_value(m, p));
  return out;
}

/// Seeded form with integer coefficients in [-99, 99].
ExactForm random_form(const SurfaceRing& ring, Side side, DegreeClass d, std::uint64_t seed);

FloatForm to_float(const ExactForm& f);

/// Exchanges the two P1 factors of P1xP1: (t,u) -> (u,t), (a,b) -> (b,a).
template <class Scalar>
MultiForm<Scalar> swap_factors(const MultiForm<Scalar>& f) {
  if (f.ring().surface() != Surface::P1xP1) throw std::invalid_argument("swap_factors: P1xP1 only");
  MultiForm<Scalar> out(f.ring(), f.side(), {f.degree().b, f.degree().a});
  for (const auto& [e, c] : f.terms()) out.add_term({e[2], e[3], e[0], e[1]}, c);
  return out;
}

/// Linear change of coordinates on an S-side P1xP1 form:
/// x -> mx * x, y -> my * y (matrices act on the coordinate column).
ExactForm linear_change(const ExactForm& f, const std::array<Rational, 4>& mx,
                        const std::array<Rational, 4>& my);

// ---------------------------------------------------------------------------
// points

/// Rescales p by the torus so that coordinate t_a and u_b equal 1 (for P3,
/// coordinate `a` equals 1). Requires those coordinates to be nonzero.
CoxPoint<Complex> normalize_to_chart(const SurfaceRing& ring, const CoxPoint<Complex>& p,
                                     int a, int b);

/// Chart indices (a, b) maximizing the normalized chart coordinates' size.
std::array<int, 2> best_chart(const SurfaceRing& ring, const CoxPoint<Complex>& p);

/// Sine of the angle between nu_H(p) and nu_H(q), H the comparison class;
/// zero iff p and q are the same surface point.
double point_distance(const SurfaceRing& ring, const CoxPoint<Complex>& p, const CoxPoint<Complex>& q);

template <class Scalar>
CoxPoint<Complex> to_complex_point(const CoxPoint<Scalar>& p) {
  return {to_complex(p[0]), to_complex(p[1]), to_complex(p[2]), to_complex(p[3])};
}

}  // namespace apolar
