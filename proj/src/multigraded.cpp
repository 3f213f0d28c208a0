#include "apolar/multigraded.hpp"

#include <algorithm>
#include <cmath>

namespace apolar {

std::string to_string(DegreeClass d) {
  return std::to_string(d.a) + "," + std::to_string(d.b);
}

SurfaceRing SurfaceRing::from_name(std::string_view name) {
  if (name == "p1xp1") return p1xp1();
  if (name == "f1") return f1();
  if (name == "p3") return p3();
  throw std::invalid_argument("unknown surface '" + std::string(name) + "'");
}

std::string SurfaceRing::name() const {
  switch (surface_) {
    case Surface::P1xP1: return "p1xp1";
    case Surface::F1: return "f1";
    case Surface::P3: return "p3";
  }
  return "?";
}

std::array<int, 2> SurfaceRing::weight(std::size_t var) const {
  if (var > 3) throw std::out_of_range("variable index");
  switch (surface_) {
    case Surface::P1xP1: return var < 2 ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
    case Surface::F1:
      if (var == 0) return {1, 0};
      if (var == 1) return {1, 1};
      return {0, 1};
    case Surface::P3: return {1, 0};
  }
  return {0, 0};
}

DegreeClass SurfaceRing::degree_of(const Exponent& e) const {
  DegreeClass d;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto w = weight(i);
    d.a += e[i] * w[0];
    d.b += e[i] * w[1];
  }
  return d;
}

bool SurfaceRing::is_effective(DegreeClass d) const {
  if (surface_ == Surface::P3) return d.a >= 0 && d.b == 0;
  return d.a >= 0 && d.b >= 0;
}

std::string SurfaceRing::variable(Side side, std::size_t var) const {
  static const char* t_names[] = {"t0", "t1", "u0", "u1"};
  static const char* s_names[] = {"x0", "x1", "y0", "y1"};
  static const char* p3_t[] = {"v0", "v1", "v2", "v3"};
  static const char* p3_s[] = {"z0", "z1", "z2", "z3"};
  if (var > 3) throw std::out_of_range("variable index");
  if (surface_ == Surface::P3) return side == Side::T ? p3_t[var] : p3_s[var];
  return side == Side::T ? t_names[var] : s_names[var];
}

DegreeClass SurfaceRing::comparison_class() const {
  switch (surface_) {
    case Surface::P1xP1: return {1, 1};
    case Surface::F1: return {1, 2};
    case Surface::P3: return {1, 0};
  }
  return {0, 0};
}

std::vector<Exponent> monomials(const SurfaceRing& ring, DegreeClass d) {
  std::vector<Exponent> out;
  if (!ring.is_effective(d)) return out;
  const int a = d.a;
  const int b = d.b;
  switch (ring.surface()) {
    case Surface::P1xP1:
      for (int e0 = a; e0 >= 0; --e0)
        for (int e2 = b; e2 >= 0; --e2) out.push_back({e0, a - e0, e2, b - e2});
      break;
    case Surface::F1:
      // t0^(a-j) t1^j u^(b-j), 0 <= j <= min(a,b)
      for (int j = 0; j <= std::min(a, b); ++j)
        for (int e2 = b - j; e2 >= 0; --e2) out.push_back({a - j, j, e2, b - j - e2});
      break;
    case Surface::P3:
      for (int e0 = a; e0 >= 0; --e0)
        for (int e1 = a - e0; e1 >= 0; --e1)
          for (int e2 = a - e0 - e1; e2 >= 0; --e2) out.push_back({e0, e1, e2, a - e0 - e1 - e2});
      break;
  }
  return out;
}

std::size_t dim(const SurfaceRing& ring, DegreeClass d) {
  if (!ring.is_effective(d)) return 0;
  switch (ring.surface()) {
    case Surface::P1xP1: return static_cast<std::size_t>((d.a + 1) * (d.b + 1));
    case Surface::F1: {
      std::size_t n = 0;
      for (int j = 0; j <= std::min(d.a, d.b); ++j) n += static_cast<std::size_t>(d.b - j + 1);
      return n;
    }
    case Surface::P3:
      return static_cast<std::size_t>((d.a + 1) * (d.a + 2) * (d.a + 3) / 6);
  }
  return 0;
}

std::size_t monomial_index(const SurfaceRing& ring, DegreeClass d, const Exponent& e) {
  const auto mons = monomials(ring, d);
  auto it = std::lower_bound(mons.begin(), mons.end(), e, std::greater<Exponent>());
  if (it == mons.end() || *it != e) throw std::invalid_argument("monomial not of this degree");
  return static_cast<std::size_t>(it - mons.begin());
}

long exponent_factorial(const Exponent& e) {
  long r = 1;
  for (int v : e)
    for (int k = 2; k <= v; ++k) r *= k;
  return r;
}

std::string monomial_string(const SurfaceRing& ring, Side side, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variable(side, i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

ExactForm random_form(const SurfaceRing& ring, Side side, DegreeClass d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(ring.surface()),
                             static_cast<std::uint64_t>(d.a + 1000),
                             static_cast<std::uint64_t>(d.b + 1000)}));
  ExactForm f(ring, side, d);
  for (const auto& m : monomials(ring, d)) f.add_term(m, Rational(uniform_int(rng, -99, 99)));
  return f;
}

FloatForm to_float(const ExactForm& f) {
  FloatForm out(f.ring(), f.side(), f.degree());
  for (const auto& [e, c] : f.terms()) out.add_term(e, to_complex(c));
  return out;
}

ExactForm linear_change(const ExactForm& f, const std::array<Rational, 4>& mx,
                        const std::array<Rational, 4>& my) {
  if (f.ring().surface() != Surface::P1xP1 || f.side() != Side::S)
    throw std::invalid_argument("linear_change: S-side P1xP1 forms only");
  const SurfaceRing ring = f.ring();
  auto linear = [&](const std::array<Rational, 4>& m, std::size_t row, bool first_factor) {
    ExactForm l(ring, Side::S, first_factor ? DegreeClass{1, 0} : DegreeClass{0, 1});
    const std::size_t off = first_factor ? 0 : 2;
    Exponent e0{}, e1{};
    e0[off] = 1;
    e1[off + 1] = 1;
    l.add_term(e0, m[row * 2]);
    l.add_term(e1, m[row * 2 + 1]);
    return l;
  };
  const std::array<ExactForm, 4> images{linear(mx, 0, true), linear(mx, 1, true),
                                        linear(my, 0, false), linear(my, 1, false)};
  ExactForm out(ring, Side::S, f.degree());
  for (const auto& [e, c] : f.terms()) {
    ExactForm term(ring, Side::S, {0, 0});
    term.add_term({0, 0, 0, 0}, c);
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) term = multiply(term, images[i]);
    out = out + term;
  }
  return out;
}

CoxPoint<Complex> normalize_to_chart(const SurfaceRing& ring, const CoxPoint<Complex>& p, int a,
                                     int b) {
  CoxPoint<Complex> q = p;
  switch (ring.surface()) {
    case Surface::P3: {
      const Complex s = q[static_cast<std::size_t>(a)];
      if (s == Complex(0.0)) throw std::domain_error("chart coordinate vanishes");
      for (auto& v : q) v /= s;
      q[static_cast<std::size_t>(a)] = 1.0;
      return q;
    }
    case Surface::P1xP1: {
      const Complex st = q[static_cast<std::size_t>(a)];
      const Complex su = q[2 + static_cast<std::size_t>(b)];
      if (st == Complex(0.0) || su == Complex(0.0)) throw std::domain_error("chart coordinate vanishes");
      q[0] /= st;
      q[1] /= st;
      q[2] /= su;
      q[3] /= su;
      q[static_cast<std::size_t>(a)] = 1.0;
      q[2 + static_cast<std::size_t>(b)] = 1.0;
      return q;
    }
    case Surface::F1: {
      // torus: t0 -> l t0, t1 -> l m t1, u -> m u
      const Complex su = q[2 + static_cast<std::size_t>(b)];
      if (su == Complex(0.0)) throw std::domain_error("chart coordinate vanishes");
      const Complex mu = 1.0 / su;
      q[1] *= mu;
      q[2] *= mu;
      q[3] *= mu;
      const Complex st = q[static_cast<std::size_t>(a)];
      if (st == Complex(0.0)) throw std::domain_error("chart coordinate vanishes");
      const Complex lambda = 1.0 / st;
      q[0] *= lambda;
      q[1] *= lambda;
      q[static_cast<std::size_t>(a)] = 1.0;
      q[2 + static_cast<std::size_t>(b)] = 1.0;
      return q;
    }
  }
  return q;
}

std::array<int, 2> best_chart(const SurfaceRing& ring, const CoxPoint<Complex>& p) {
  switch (ring.surface()) {
    case Surface::P3: {
      int best = 0;
      for (int i = 1; i < 4; ++i)
        if (std::abs(p[static_cast<std::size_t>(i)]) > std::abs(p[static_cast<std::size_t>(best)])) best = i;
      return {best, 0};
    }
    case Surface::P1xP1:
      return {std::abs(p[1]) > std::abs(p[0]) ? 1 : 0, std::abs(p[3]) > std::abs(p[2]) ? 1 : 0};
    case Surface::F1: {
      const int b = std::abs(p[3]) > std::abs(p[2]) ? 1 : 0;
      const Complex t1 = p[1] / p[2 + static_cast<std::size_t>(b)];
      return {std::abs(t1) > std::abs(p[0]) ? 1 : 0, b};
    }
  }
  return {0, 0};
}

double point_distance(const SurfaceRing& ring, const CoxPoint<Complex>& p, const CoxPoint<Complex>& q) {
  const DegreeClass h = ring.comparison_class();
  const auto vp = evaluation_vector(ring, h, p);
  const auto vq = evaluation_vector(ring, h, q);
  double np = 0, nq = 0;
  for (std::size_t i = 0; i < vp.size(); ++i) {
    np += std::norm(vp[i]);
    nq += std::norm(vq[i]);
  }
  if (np == 0 || nq == 0) throw std::domain_error("point_distance: degenerate point");
  np = std::sqrt(np);
  nq = std::sqrt(nq);
  Complex ip = 0;
  for (std::size_t i = 0; i < vp.size(); ++i) ip += std::conj(vq[i] / nq) * (vp[i] / np);
  // sine of the angle as the norm of the rejection, accurate for close points
  double r2 = 0;
  for (std::size_t i = 0; i < vp.size(); ++i) r2 += std::norm(vp[i] / np - ip * (vq[i] / nq));
  return std::sqrt(r2);
}

}  // namespace apolar
