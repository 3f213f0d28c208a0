#include "apolar/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace apolar {

namespace {

struct ChartPoint {
  std::array<int, 2> chart{0, 0};
  CoxPoint<Complex> cox{};
};

std::vector<std::size_t> free_coordinates(const SurfaceRing& ring, const std::array<int, 2>& chart) {
  if (ring.surface() == Surface::P3) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < 4; ++i)
      if (static_cast<int>(i) != chart[0]) v.push_back(i);
    return v;
  }
  return {static_cast<std::size_t>(1 - chart[0]), static_cast<std::size_t>(2 + (1 - chart[1]))};
}

ChartPoint rechart(const SurfaceRing& ring, const CoxPoint<Complex>& p) {
  ChartPoint c;
  c.chart = best_chart(ring, p);
  c.cox = normalize_to_chart(ring, p, c.chart[0], c.chart[1]);
  return c;
}

ChartPoint random_point(const SurfaceRing& ring, Rng& rng) {
  CoxPoint<Complex> p;
  for (auto& z : p) z = complex_normal(rng);
  return rechart(ring, p);
}

ComplexMatrix eval_columns(const SurfaceRing& ring, DegreeClass a, const std::vector<ChartPoint>& pts) {
  const std::size_t n = dim(ring, a);
  ComplexMatrix v(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto nu = evaluation_vector(ring, a, pts[i].cox);
    for (std::size_t j = 0; j < n; ++j) v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = nu[j];
  }
  return v;
}

// d nu / d p_var at p
std::vector<Complex> eval_derivative(const std::vector<Exponent>& mons, const CoxPoint<Complex>& p,
                                     std::size_t var) {
  std::vector<Complex> out(mons.size(), 0.0);
  for (std::size_t j = 0; j < mons.size(); ++j) {
    Exponent e = mons[j];
    if (e[var] == 0) continue;
    const double mult = e[var];
    --e[var];
    out[j] = mult * monomial_value(e, p);
  }
  return out;
}

bool finite(const CoxPoint<Complex>& p) {
  for (const auto& z : p)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

class Solver {
 public:
  explicit Solver(const DecompositionProblem& pr) : pr_(pr), mons_(monomials(pr.ring, pr.degree)) {
    w_ = ComplexVector(static_cast<Eigen::Index>(pr.target.size()));
    for (std::size_t i = 0; i < pr.target.size(); ++i) w_(static_cast<Eigen::Index>(i)) = pr.target[i];
    wn_ = w_.norm();
  }

  struct State {
    std::vector<ChartPoint> pts;
    ComplexVector c;
    double residual = std::numeric_limits<double>::infinity();
    int iterations = 0;
  };

  bool evaluate(State& s) const {
    for (const auto& p : s.pts)
      if (!finite(p.cox)) return false;
    const ComplexMatrix v = eval_columns(pr_.ring, pr_.degree, s.pts);
    if (!v.allFinite()) return false;
    const auto ls = least_squares(v, w_);
    if (!ls.x.allFinite()) return false;
    s.c = ls.x;
    s.residual = ls.residual_norm / wn_;
    return std::isfinite(s.residual);
  }

  // Runs LM until the residual drops below stop_tol or progress stalls.
  void iterate(State& s, int max_iterations, double stop_tol) const {
    const auto& o = pr_.options;
    if (!evaluate(s)) return;
    double lambda = -1;
    for (int it = 0; it < max_iterations && s.residual >= stop_tol; ++it) {
      const ComplexMatrix v = eval_columns(pr_.ring, pr_.degree, s.pts);
      const ComplexVector r = v * s.c - w_;
      std::vector<std::pair<std::size_t, std::size_t>> params;  // (point, coordinate)
      for (std::size_t i = 0; i < s.pts.size(); ++i)
        for (auto var : free_coordinates(pr_.ring, s.pts[i].chart)) params.emplace_back(i, var);
      const auto k = static_cast<Eigen::Index>(s.pts.size());
      ComplexMatrix j(v.rows(), k + static_cast<Eigen::Index>(params.size()));
      j.leftCols(k) = v;
      for (std::size_t q = 0; q < params.size(); ++q) {
        const auto [i, var] = params[q];
        const auto d = eval_derivative(mons_, s.pts[i].cox, var);
        for (std::size_t row = 0; row < d.size(); ++row)
          j(static_cast<Eigen::Index>(row), k + static_cast<Eigen::Index>(q)) = s.c(static_cast<Eigen::Index>(i)) * d[row];
      }
      const ComplexMatrix a = j.adjoint() * j;
      const ComplexVector g = j.adjoint() * r;
      const double scale = a.diagonal().real().maxCoeff();
      if (!(scale > 0) || !std::isfinite(scale)) return;
      if (lambda < 0) lambda = o.damping;

      bool accepted = false;
      for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
        ComplexMatrix damped = a;
        damped.diagonal().array() += lambda * (a.diagonal().real().array() + 1e-12 * scale);
        const ComplexVector delta = damped.ldlt().solve(-g);
        State trial;
        trial.pts = s.pts;
        for (std::size_t q = 0; q < params.size(); ++q) {
          const auto [i, var] = params[q];
          trial.pts[i].cox[var] += delta(k + static_cast<Eigen::Index>(q));
        }
        if (evaluate(trial) && trial.residual < s.residual) {
          trial.iterations = s.iterations + 1;
          for (auto& p : trial.pts) {
            bool out_of_bounds = false;
            for (auto var : free_coordinates(pr_.ring, p.chart))
              if (std::abs(p.cox[var]) > o.chart_bound) out_of_bounds = true;
            if (out_of_bounds) p = rechart(pr_.ring, p.cox);
          }
          if (!evaluate(trial)) return;
          s = std::move(trial);
          lambda = std::max(lambda * o.damping_down, 1e-15);
          accepted = true;
        } else {
          lambda *= o.damping_up;
          if (lambda > 1e16) return;
        }
      }
      if (!accepted) return;
    }
  }

  Decomposition to_decomposition(const State& s, int start) const {
    Decomposition d;
    d.scheme.ring = pr_.ring;
    for (const auto& p : s.pts) d.scheme.points.push_back(p.cox);
    d.coefficients.assign(s.c.data(), s.c.data() + s.c.size());
    d.residual = decomposition_residual(pr_.ring, pr_.degree, pr_.target, d.scheme.points, d.coefficients);
    d.iterations = s.iterations;
    d.start_index = start;
    return d;
  }

  State from_decomposition(const Decomposition& d) const {
    State s;
    for (const auto& p : d.scheme.points) s.pts.push_back(rechart(pr_.ring, p));
    s.iterations = d.iterations;
    return s;
  }

  const DecompositionProblem& problem() const { return pr_; }

 private:
  const DecompositionProblem& pr_;
  std::vector<Exponent> mons_;
  ComplexVector w_;
  double wn_ = 1.0;
};

struct StartOutcome {
  bool success = false;
  bool collision = false;
  double residual = std::numeric_limits<double>::infinity();
  Decomposition decomposition;
};

bool has_collision(const SurfaceRing& ring, const std::vector<CoxPoint<Complex>>& pts, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (point_distance(ring, pts[i], pts[j]) < tol) return true;
  return false;
}

StartOutcome run_start(const Solver& solver, std::uint64_t seed, int start) {
  const auto& pr = solver.problem();
  Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(start)}));
  Solver::State s;
  for (std::size_t i = 0; i < pr.length; ++i) s.pts.push_back(random_point(pr.ring, rng));
  solver.iterate(s, pr.options.max_iterations, pr.options.tolerance);
  StartOutcome out;
  if (!std::isfinite(s.residual) || s.c.size() == 0) return out;
  out.decomposition = solver.to_decomposition(s, start);
  out.residual = out.decomposition.residual;
  if (out.residual < pr.options.tolerance) {
    if (has_collision(pr.ring, out.decomposition.scheme.points, pr.options.collision_tol))
      out.collision = true;
    else
      out.success = true;
  }
  return out;
}

}  // namespace

DecompositionProblem DecompositionProblem::from_form(const FloatForm& f, std::size_t k, DecomposeOptions opts) {
  if (f.side() != Side::S) throw std::invalid_argument("decompose: target must be an S-side form");
  DecompositionProblem p;
  p.ring = f.ring();
  p.degree = f.degree();
  p.target = functional_values(f);
  p.length = k;
  p.options = opts;
  return p;
}

void DecompositionProblem::validate() const {
  if (length < 1) throw std::invalid_argument("decompose: length must be at least 1");
  if (!(options.tolerance > 0)) throw std::invalid_argument("decompose: tolerance must be positive");
  if (options.restarts < 1) throw std::invalid_argument("decompose: restarts must be positive");
  if (target.size() != dim(ring, degree)) throw std::invalid_argument("decompose: target has the wrong length");
  double n = 0;
  for (const auto& z : target) n += std::norm(z);
  if (n == 0) throw std::invalid_argument("decompose: zero target");
}

double decomposition_residual(const SurfaceRing& ring, DegreeClass a, const std::vector<Complex>& target,
                              const std::vector<CoxPoint<Complex>>& points,
                              const std::vector<Complex>& coefficients) {
  std::vector<Complex> sum(target.size(), 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto nu = evaluation_vector(ring, a, points[i]);
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += coefficients[i] * nu[j];
  }
  double num = 0, den = 0;
  for (std::size_t j = 0; j < sum.size(); ++j) {
    num += std::norm(sum[j] - target[j]);
    den += std::norm(target[j]);
  }
  return std::sqrt(num / den);
}

std::vector<Complex> solve_coefficients(const SurfaceRing& ring, DegreeClass a, const std::vector<Complex>& target,
                                        const std::vector<CoxPoint<Complex>>& points) {
  const std::size_t n = dim(ring, a);
  ComplexMatrix v(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto nu = evaluation_vector(ring, a, points[i]);
    for (std::size_t j = 0; j < n; ++j) v(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = nu[j];
  }
  ComplexVector w(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) w(static_cast<Eigen::Index>(j)) = target[j];
  const auto ls = least_squares(v, w);
  return {ls.x.data(), ls.x.data() + ls.x.size()};
}

DecomposeResult gauss_newton_decompose(const DecompositionProblem& problem, std::uint64_t seed) {
  problem.validate();
  const Solver solver(problem);
  DecomposeResult result;
  result.best_residual = std::numeric_limits<double>::infinity();
  const int total = problem.options.restarts;
  const int batch = problem.options.schedule == Schedule::Serial
                        ? 1
                        : static_cast<int>(std::max<std::size_t>(problem.options.batch, 1));

  for (int first = 0; first < total; first += batch) {
    const int count = std::min(batch, total - first);
    const auto outcomes = run_indexed<StartOutcome>(
        static_cast<std::size_t>(count), problem.options.schedule,
        [&](std::size_t i) { return run_start(solver, seed, first + static_cast<int>(i)); });
    for (int i = 0; i < count; ++i) {
      const auto& o = outcomes[static_cast<std::size_t>(i)];
      result.best_residual = std::min(result.best_residual, o.residual);
      if (o.collision) ++result.collisions;
      if (o.success) {
        result.decomposition = o.decomposition;
        result.starts_run = first + i + 1;
        return result;
      }
    }
  }
  result.starts_run = total;
  return result;
}

std::vector<Decomposition> decompose_all(const DecompositionProblem& problem, std::uint64_t seed,
                                         int max_successes) {
  problem.validate();
  const Solver solver(problem);
  std::vector<Decomposition> found;
  const int total = problem.options.restarts;
  const int batch = static_cast<int>(std::max<std::size_t>(problem.options.batch, 1));
  for (int first = 0; first < total && static_cast<int>(found.size()) < max_successes; first += batch) {
    const int count = std::min(batch, total - first);
    const auto outcomes = run_indexed<StartOutcome>(
        static_cast<std::size_t>(count), problem.options.schedule,
        [&](std::size_t i) { return run_start(solver, seed, first + static_cast<int>(i)); });
    for (const auto& o : outcomes)
      if (o.success && static_cast<int>(found.size()) < max_successes) found.push_back(o.decomposition);
  }
  return found;
}

PolishResult polish(const Decomposition& dec, const DecompositionProblem& problem, int iterations) {
  problem.validate();
  if (!(dec.residual < 1e-2)) throw std::invalid_argument("polish: input residual must be below 1e-2");
  const Solver solver(problem);
  auto s = solver.from_decomposition(dec);
  PolishResult out{dec, false, false};
  solver.iterate(s, iterations, 0.0);
  if (!std::isfinite(s.residual) || s.c.size() == 0) {
    out.diverged = true;
    return out;
  }
  auto cand = solver.to_decomposition(s, dec.start_index);
  if (cand.residual < dec.residual) {
    out.decomposition = std::move(cand);
    out.improved = true;
  }
  return out;
}

}  // namespace apolar
