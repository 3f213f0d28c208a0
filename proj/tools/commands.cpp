#include "commands.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/case22.hpp"
#include "apolar/case33.hpp"
#include "apolar/casef1.hpp"
#include "apolar/errors.hpp"
#include "apolar/io.hpp"
#include "apolar/secant_rank.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace apolar::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ojson deg(DegreeClass d) { return ojson::array({d.a, d.b}); }

std::string class_name(const SurfaceRing& ring, DegreeClass d) {
  if (ring.surface() != Surface::F1) return "(" + to_string(d) + ")";
  std::string s;
  if (d.a) s += (d.a == 1 ? "" : std::to_string(d.a)) + "E";
  if (d.b) s += (s.empty() ? "" : "+") + (d.b == 1 ? std::string() : std::to_string(d.b)) + "F";
  return s.empty() ? "0" : s;
}

SurfaceRing surface_ring(const std::string& name) {
  if (name != "p1xp1" && name != "f1") throw std::invalid_argument("unknown surface \"" + name + "\"");
  return SurfaceRing::from_name(name);
}

std::uint64_t form_seed(std::uint64_t seed, int attempt) {
  return derive_seed(seed, {static_cast<std::uint64_t>(attempt)});
}

// Runs body(form_seed, report) on up to kReseeds derived seeds. A
// GenericityError discards that attempt; when every attempt is rejected all
// contract checks are reported as rejected-genericity.
template <class Body>
void with_reseed(Report& rep, std::uint64_t seed, const std::vector<std::string>& contract, Body body) {
  ojson rejections = ojson::array();
  for (int attempt = 0; attempt < kReseeds; ++attempt) {
    Report trial = rep;
    try {
      body(form_seed(seed, attempt), trial);
      trial.data["attempts"] = attempt + 1;
      trial.data["rejections"] = rejections;
      trial.complete(contract);
      rep = std::move(trial);
      return;
    } catch (const GenericityError& e) {
      rejections.push_back({{"attempt", attempt}, {"check", e.check()}, {"reason", e.what()}});
    }
  }
  rep.data["attempts"] = kReseeds;
  rep.data["rejections"] = rejections;
  for (const auto& name : contract) rep.reject(name, {{"reason", "no general form within the reseed budget"}});
}

std::size_t closed_form_dim(const SurfaceRing& ring, DegreeClass d) {
  if (d.a < 0 || d.b < 0) return 0;
  const auto a = static_cast<std::size_t>(d.a), b = static_cast<std::size_t>(d.b);
  if (ring.surface() == Surface::P1xP1) return (a + 1) * (b + 1);
  std::size_t n = 0;
  for (std::size_t j = 0; j <= a && j <= b; ++j) n += b - j + 1;
  return n;
}

std::size_t ideal_dim(const ExactForm& f, DegreeClass b) { return orthogonal_component(f, b).size(); }

void require_dim(const ExactForm& f, const std::string& label, DegreeClass b, std::size_t expected) {
  const auto d = ideal_dim(f, b);
  if (d != expected)
    throw GenericityError("dim I_f" + label, "dim I_f" + label + " = " + std::to_string(d) + ", expected " +
                                                 std::to_string(expected));
}

// T_{c-b} * I_{f,b} inside T_c: rank of the product and whether it fills I_{f,c}.
struct Generated {
  std::size_t rank = 0;
  bool equals_target = false;
};

Generated generated(const ExactForm& f, const std::vector<std::pair<DegreeClass, DegreeClass>>& pieces,
                    DegreeClass c) {
  const auto& ring = f.ring();
  std::vector<RationalVector> span;
  for (const auto& [shift, b] : pieces) {
    auto part = multiply_span(ring, shift, b, orthogonal_component(f, b));
    span.insert(span.end(), part.begin(), part.end());
  }
  const auto target = orthogonal_component(f, c);
  const std::size_t n = dim(ring, c);
  Generated g;
  g.rank = span_rank(span, n);
  g.equals_target = g.rank == target.size() && span_contains(target, span, n);
  return g;
}

ojson points_json(const FloatScheme& s) {
  ojson a = ojson::array();
  for (const auto& p : s.points) a.push_back(to_json(p));
  return a;
}

ojson complex_array(const std::vector<Complex>& v) {
  ojson a = ojson::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

template <class T, class Fn>
double max_of(const std::vector<T>& xs, Fn fn) {
  double m = 0.0;
  for (const auto& x : xs) m = std::max(m, fn(x));
  return m;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::RejectedGenericity: return "rejected-genericity";
  }
  return "fail";
}

void Report::check(const std::string& name, bool ok, ojson payload) {
  checks_.push_back({name, ok ? Status::Pass : Status::Fail, std::move(payload)});
}

void Report::reject(const std::string& name, ojson payload) {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  if (it != checks_.end()) checks_.erase(it);
  checks_.push_back({name, Status::RejectedGenericity, std::move(payload)});
}

void Report::complete(const std::vector<std::string>& contract) {
  for (const auto& name : contract)
    if (!find(name)) check(name, false, {{"reason", "not evaluated"}});
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Pass; });
}

ojson Report::to_json(bool with_timings) const {
  ojson out;
  out["version"] = kVersion;
  out["command"] = command_;
  out["surface"] = surface.empty() ? ojson() : ojson(surface);
  out["degree"] = degree ? deg(*degree) : ojson();
  out["seed"] = opts_.seed;
  out["tolerances"] = {{"rank", opts_.tol_rank}, {"residual", opts_.tol_res}};
  out["restarts"] = opts_.restarts;
  out["samples"] = opts_.samples ? ojson(*opts_.samples) : ojson();
  out["data"] = data;
  ojson checks = ojson::array();
  for (const auto& c : checks_)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"payload", c.payload}});
  out["checks"] = checks;
  out["passed"] = passed();
  if (with_timings) {
    ojson t = ojson::object();
    for (const auto& [k, v] : timings_) t[k] = v;
    out["timings"] = t;
  }
  return out;
}

DegreeClass parse_degree(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("degree must be written a,b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(text.substr(0, comma), &used_a);
    const int b = std::stoi(text.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != text.size() - comma - 1) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw std::invalid_argument("degree must be written a,b with integers a and b");
  }
}

// ---------------------------------------------------------------------------

Report cmd_dims(const std::string& surface, DegreeClass degree, const Options& opts) {
  const auto t0 = Clock::now();
  const SurfaceRing ring = surface_ring(surface);
  if (!ring.is_effective(degree)) throw std::invalid_argument("degree " + to_string(degree) + " is not effective");
  Report rep("dims", opts);
  rep.surface = ring.name();
  rep.degree = degree;

  ojson table = ojson::array();
  bool counts_ok = dim(ring, degree) == closed_form_dim(ring, degree);
  for (const auto& b : degrees_below(ring, degree)) {
    const auto tb = dim(ring, b);
    const auto sab = dim(ring, degree - b);
    counts_ok = counts_ok && tb == closed_form_dim(ring, b) && sab == closed_form_dim(ring, degree - b);
    table.push_back({{"B", deg(b)}, {"class", class_name(ring, b)}, {"dim_T_B", tb}, {"dim_S_A-B", sab}});
  }
  rep.data["dim_T_A"] = dim(ring, degree);
  rep.data["table"] = table;
  rep.check("monomial count", counts_ok, {{"entries", table.size()}});
  rep.time("total", seconds_since(t0));
  return rep;
}

Report cmd_profile(const std::string& surface, DegreeClass degree, const Options& opts) {
  const auto t0 = Clock::now();
  const SurfaceRing ring = surface_ring(surface);
  if (!ring.is_effective(degree)) throw std::invalid_argument("degree " + to_string(degree) + " is not effective");
  Report rep("profile", opts);
  rep.surface = ring.name();
  rep.degree = degree;

  const bool is22 = ring.surface() == Surface::P1xP1 && degree == DegreeClass{2, 2};
  const bool is33 = ring.surface() == Surface::P1xP1 && degree == DegreeClass{3, 3};
  const bool isf1 = ring.surface() == Surface::F1 && degree == DegreeClass{3, 6};

  std::vector<std::string> contract{"catalecticant duality"};
  if (is22) contract.insert(contract.end(), {"dims I_f", "generation (2,2)", "generators (2,1) (1,2) (3,0) (0,3)"});
  if (is33)
    contract.insert(contract.end(), {"dims I_f", "generation (2,3)", "generation (3,2)", "generation (3,3)"});
  if (isf1) contract.insert(contract.end(), {"dims T", "dims I_f", "pencil dimension"});

  with_reseed(rep, opts.seed, contract, [&](std::uint64_t fs, Report& r) {
    const auto f = random_form(ring, Side::S, degree, fs);
    r.data["form"] = to_json(f);

    ojson table = ojson::array();
    std::map<DegreeClass, std::size_t> ranks;
    for (const auto& b : degrees_below(ring, degree)) {
      const auto rank = rank_exact(catalecticant(f, b).matrix);
      ranks[b] = rank;
      table.push_back({{"B", deg(b)}, {"class", class_name(ring, b)}, {"dim_T_B", dim(ring, b)},
                       {"rank", rank}, {"dim_I_f_B", dim(ring, b) - rank}});
    }
    auto idim = [&](DegreeClass b) { return dim(ring, b) - ranks.at(b); };

    // expected profiles of a general form; a mismatch redraws f
    if (is22) {
      require_dim(f, "(2,1)", {2, 1}, 4);
      require_dim(f, "(1,2)", {1, 2}, 4);
      require_dim(f, "(1,1)", {1, 1}, 0);
      require_dim(f, "(2,2)", {2, 2}, 8);
    }
    if (is33) {
      const std::vector<std::pair<DegreeClass, std::size_t>> want{
          {{2, 2}, 5}, {{3, 1}, 5}, {{1, 3}, 5}, {{2, 3}, 10}, {{3, 2}, 10}, {{3, 3}, 15}};
      for (const auto& [b, n] : want) require_dim(f, "(" + to_string(b) + ")", b, n);
    }
    if (isf1) {
      require_dim(f, "(2E+3F)", {2, 3}, 2);
      require_dim(f, "(2E+2F)", {2, 2}, 0);
      require_dim(f, "(E+3F)", {1, 3}, 0);
    }
    r.data["table"] = table;

    bool dual = true;
    for (const auto& [b, rank] : ranks) dual = dual && rank == ranks.at(degree - b);
    r.check("catalecticant duality", dual, {{"degrees", ranks.size()}});

    if (is22) {
      r.check("dims I_f", true,
              {{"(2,1)", idim({2, 1})}, {"(1,2)", idim({1, 2})}, {"(1,1)", idim({1, 1})}, {"(2,2)", idim({2, 2})}});
      const auto g = generated(f, {{{0, 1}, {2, 1}}}, {2, 2});
      if (!g.equals_target) throw GenericityError("generation (2,2)", "T(0,1) I(2,1) != I(2,2)");
      r.check("generation (2,2)", true, {{"rank", g.rank}, {"dim_I_f_(2,2)", idim({2, 2})}});
      const auto gen = generation_check(f, {{2, 1}, {1, 2}, {3, 0}, {0, 3}});
      r.check("generators (2,1) (1,2) (3,0) (0,3)", gen.all_ok, {{"degrees_checked", gen.entries.size()}});
    }
    if (is33) {
      r.check("dims I_f", true,
              {{"(2,2)", idim({2, 2})}, {"(3,1)", idim({3, 1})}, {"(1,3)", idim({1, 3})},
               {"(2,3)", idim({2, 3})}, {"(3,2)", idim({3, 2})}, {"(3,3)", idim({3, 3})}});
      const auto g23 = generated(f, {{{0, 1}, {2, 2}}}, {2, 3});
      const auto g32 = generated(f, {{{1, 0}, {2, 2}}}, {3, 2});
      const auto g33 = generated(f, {{{1, 1}, {2, 2}}, {{0, 2}, {3, 1}}, {{2, 0}, {1, 3}}}, {3, 3});
      if (!g23.equals_target || !g32.equals_target || !g33.equals_target)
        throw GenericityError("generation", "I_f is not generated in the expected degrees");
      r.check("generation (2,3)", true, {{"rank", g23.rank}});
      r.check("generation (3,2)", true, {{"rank", g32.rank}});
      r.check("generation (3,3)", true, {{"rank", g33.rank}});
    }
    if (isf1) {
      const std::vector<std::pair<DegreeClass, std::size_t>> t{
          {{1, 2}, 5}, {{2, 3}, 9}, {{1, 3}, 7}, {{3, 3}, 10}, {{3, 6}, 22}};
      bool ok = true;
      ojson p;
      for (const auto& [b, n] : t) {
        ok = ok && dim(ring, b) == n;
        p[class_name(ring, b)] = dim(ring, b);
      }
      r.check("dims T", ok, p);
      r.check("dims I_f", true, {{"2E+3F", idim({2, 3})}, {"2E+2F", idim({2, 2})}, {"E+3F", idim({1, 3})}});
      r.check("pencil dimension", idim({2, 3}) == 2, {{"dim", idim({2, 3})}});
    }
  });
  rep.time("total", seconds_since(t0));
  return rep;
}

Report cmd_rank(const std::string& surface, DegreeClass degree, const Options& opts) {
  const auto t0 = Clock::now();
  const SurfaceRing ring = surface_ring(surface);
  if (degree.a < 1 || degree.b < 1) throw std::invalid_argument("rank needs a, b >= 1");
  Report rep("rank", opts);
  rep.surface = ring.name();
  rep.degree = degree;

  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < std::max<std::size_t>(opts.seeds, 1); ++i) seeds.push_back(derive_seed(opts.seed, {i}));
  const auto cert = certify_rank(ring, degree, seeds, opts.schedule);

  ojson dims = ojson::object();
  for (const auto& [k, d] : cert.terracini_dims) dims[std::to_string(k)] = d;
  rep.data["certificate"] = {{"formula_rank", cert.formula_rank ? ojson(*cert.formula_rank) : ojson()},
                             {"terracini_dims", dims},
                             {"verified_rank", cert.verified_rank},
                             {"defective_ks", cert.defective_ks},
                             {"span_dim", dim(ring, degree)},
                             {"seeds", seeds.size()}};
  rep.check("formula agreement", cert.agrees && cert.verified_rank > 0,
            {{"formula_rank", cert.formula_rank ? ojson(*cert.formula_rank) : ojson()},
             {"verified_rank", cert.verified_rank}});
  if (ring.surface() == Surface::P1xP1) {
    const int v = vps_dimension(degree.a, degree.b);
    const int from_rank = vps_dimension_from_rank(cert.verified_rank, degree.a, degree.b);
    rep.check("vps dimension", v == from_rank, {{"vps_dimension", v}, {"from_verified_rank", from_rank}});
  }
  rep.time("total", seconds_since(t0));
  return rep;
}

// ---------------------------------------------------------------------------

Report cmd_case22(const Options& opts) {
  const auto t0 = Clock::now();
  const SurfaceRing ring = SurfaceRing::p1xp1();
  const std::size_t n = opts.samples.value_or(12);
  Report rep("case22", opts);
  rep.surface = ring.name();
  rep.degree = DegreeClass{2, 2};
  const std::vector<std::string> contract{"dims I_f",          "generation (2,2)",  "partials not split",
                                          "scheme apolarity",  "pluecker rank",     "pluecker relation",
                                          "quartic kernel",    "cubic control",     "double curve"};

  with_reseed(rep, opts.seed, contract, [&](std::uint64_t fs, Report& r) {
    auto t = Clock::now();
    const auto f = random_form(ring, Side::S, {2, 2}, fs);
    r.data["form"] = to_json(f);
    const auto ctx = build_context(f);
    const auto split = check_partials_not_split(f);
    if (!split.ok()) throw GenericityError("partials not split", "a combination of partials splits");
    require_dim(f, "(1,1)", {1, 1}, 0);
    const auto g = generated(f, {{{0, 1}, {2, 1}}}, {2, 2});
    if (!g.equals_target || g.rank != 8) throw GenericityError("generation (2,2)", "T(0,1) I(2,1) != I(2,2)");
    r.check("dims I_f", true, {{"(2,1)", ctx.basis21.size()}, {"(1,2)", ctx.basis12.size()}, {"(1,1)", 0}});
    r.check("generation (2,2)", true, {{"rank", g.rank}});
    r.check("partials not split", true, {{"gcd_degree_21", split.gcd_21.size() - 1}, {"gcd_degree_12", split.gcd_12.size() - 1}});
    r.time("context", seconds_since(t));

    t = Clock::now();
    try {
      const auto hp = hyperplane_section_check(ctx, n, derive_seed(fs, {1}), opts.schedule);
      ojson vectors = ojson::array();
      for (const auto& v : hp.vectors) vectors.push_back(complex_array({v.begin(), v.end()}));
      r.data["pluecker"] = {{"vectors", vectors}, {"singular_values", hp.singular_values},
                            {"normal", complex_array({hp.normal.begin(), hp.normal.end()})}};
      const double apolarity = std::max(hp.max_apolarity_residual, hp.max_containment_residual);
      r.check("scheme apolarity", hp.samples == n && apolarity < 1e-8 && hp.all_collinear,
              {{"samples", hp.samples}, {"rejected", hp.rejected},
               {"max_apolarity_residual", hp.max_apolarity_residual},
               {"max_containment_residual", hp.max_containment_residual},
               {"all_collinear", hp.all_collinear}, {"threshold", 1e-8}});
      r.check("pluecker rank", hp.samples == n && hp.numeric_rank == 5 && hp.gap < 1e-6,
              {{"samples", hp.samples}, {"numeric_rank", hp.numeric_rank}, {"gap", hp.gap}, {"threshold", 1e-6}});
      r.check("pluecker relation", hp.samples == n && hp.max_relation_residual < 1e-10,
              {{"max_residual", hp.max_relation_residual}, {"threshold", 1e-10}});
    } catch (const SampleRejected& e) {
      for (const char* c : {"scheme apolarity", "pluecker rank", "pluecker relation"}) r.check(c, false, {{"reason", e.what()}});
    }
    r.time("pluecker", seconds_since(t));

    t = Clock::now();
    const auto q = implicitize_quartic(ctx);
    r.check("quartic kernel", q.kernel_dim_quartic == 1,
            {{"kernel_dim", q.kernel_dim_quartic}, {"rows", q.rows_quartic}, {"cols", q.cols_quartic}});
    r.check("cubic control", q.kernel_dim_cubic == 0 && q.kernel_dim_quadric == 0,
            {{"cubic_kernel_dim", q.kernel_dim_cubic}, {"quadric_kernel_dim", q.kernel_dim_quadric}});
    ojson quartic = ojson::array();
    for (const auto& c : q.quartic) quartic.push_back(apolar::to_string(c));
    r.data["quartic"] = quartic;
    r.time("quartic", seconds_since(t));

    t = Clock::now();
    try {
      const auto dc = double_curve_probe(ctx, q, 12, derive_seed(fs, {2}));
      r.check("double curve", dc.points.size() >= 12 && dc.quadric_dim == 3 && dc.quadric_dim_control <= 2 &&
                                  dc.max_gradient < 1e-6,
              {{"points", dc.points.size()}, {"planes", dc.planes_used}, {"quadric_dim", dc.quadric_dim},
               {"quadric_dim_control", dc.quadric_dim_control}, {"max_gradient", dc.max_gradient}});
    } catch (const SampleRejected& e) {
      r.check("double curve", false, {{"reason", e.what()}});
    }
    r.time("double_curve", seconds_since(t));
  });
  rep.time("total", seconds_since(t0));
  return rep;
}

Report cmd_case33(const Options& opts) {
  const auto t0 = Clock::now();
  const SurfaceRing ring = SurfaceRing::p1xp1();
  const std::size_t n = opts.samples.value_or(10);
  Report rep("case33", opts);
  rep.surface = ring.name();
  rep.degree = DegreeClass{3, 3};
  const std::vector<std::string> contract{"dims I_f",         "harmonic lift",       "perp2",
                                          "pentahedron",      "pentahedron ideal",   "segre avoidance",
                                          "apolar samples"};

  with_reseed(rep, opts.seed, contract, [&](std::uint64_t fs, Report& r) {
    auto t = Clock::now();
    const auto f = random_form(ring, Side::S, {3, 3}, fs);
    r.data["form"] = to_json(f);
    const std::vector<std::pair<DegreeClass, std::size_t>> want{
        {{2, 2}, 5}, {{3, 1}, 5}, {{1, 3}, 5}, {{2, 3}, 10}, {{3, 2}, 10}, {{3, 3}, 15}};
    ojson dims;
    for (const auto& [b, k] : want) {
      require_dim(f, "(" + to_string(b) + ")", b, k);
      dims["(" + to_string(b) + ")"] = k;
    }
    r.check("dims I_f", true, dims);

    const auto lift = harmonic_lift(f);
    r.data["lift"] = to_json(lift.F);
    r.check("harmonic lift", lift.system_rank == 20 && lift.substitution_exact && lift.harmonic,
            {{"system_rows", lift.system_rows}, {"system_rank", lift.system_rank},
             {"substitution_exact", lift.substitution_exact}, {"harmonic", lift.harmonic}});
    r.check("perp2", lift.perp2_dim == 6 && lift.perp2_contains_delta && lift.image_dim == 5 && lift.image_is_i22,
            {{"perp2_dim", lift.perp2_dim}, {"contains_delta", lift.perp2_contains_delta},
             {"image_dim", lift.image_dim}, {"i22_dim", lift.i22_dim}});
    r.time("lift", seconds_since(t));

    t = Clock::now();
    const auto pent = pentahedron(lift, derive_seed(fs, {1}), opts.schedule, opts.restarts);
    ojson pts = ojson::array();
    for (const auto& p : pent.points) pts.push_back(complex_array({p.begin(), p.end()}));
    r.data["pentahedron"] = {{"points", pts}, {"coefficients", complex_array(pent.coefficients)}};
    r.check("pentahedron", pent.agreeing_starts >= 3 && pent.max_disagreement < 1e-6 && pent.residual < 1e-10,
            {{"agreeing_starts", pent.agreeing_starts}, {"starts_run", pent.starts_run},
             {"max_disagreement", pent.max_disagreement}, {"residual", pent.residual}});
    r.check("pentahedron ideal", pent.ideal_dim == 5 && pent.ideal_in_perp_residual < 1e-8,
            {{"ideal_dim", pent.ideal_dim}, {"in_perp_residual", pent.ideal_in_perp_residual}, {"threshold", 1e-8}});
    r.check("segre avoidance", pent.min_segre_value > 1e-6, {{"min_segre_value", pent.min_segre_value}});
    r.time("pentahedron", seconds_since(t));

    t = Clock::now();
    try {
      const auto batch = vps33_samples(lift, pent, n, derive_seed(fs, {2}), opts.schedule);
      ojson samples = ojson::array();
      bool ok = batch.samples.size() == n;
      for (const auto& s : batch.samples) {
        ok = ok && s.scheme.size() == 6 && s.apolar && s.span_residual < 1e-7 && s.max_det < 1e-10 &&
             s.planted_distance < 1e-8;
        samples.push_back({{"points", points_json(s.scheme)}, {"span_residual", s.span_residual},
                           {"ideal_residual", s.ideal_residual}, {"planted_distance", s.planted_distance},
                           {"max_det", s.max_det}, {"apolar", s.apolar}});
      }
      r.data["samples"] = samples;
      r.check("apolar samples", ok,
              {{"samples", batch.samples.size()}, {"rejected", batch.rejected},
               {"max_span_residual", max_of(batch.samples, [](const auto& s) { return s.span_residual; })},
               {"threshold", 1e-7}});
    } catch (const SampleRejected& e) {
      r.check("apolar samples", false, {{"reason", e.what()}});
    }
    r.time("samples", seconds_since(t));
  });
  rep.time("total", seconds_since(t0));
  return rep;
}

Report cmd_casef1(const Options& opts) {
  const auto t0 = Clock::now();
  const SurfaceRing ring = SurfaceRing::f1();
  const std::size_t n = opts.samples.value_or(10);
  Report rep("casef1", opts);
  rep.surface = ring.name();
  rep.degree = DegreeClass{3, 6};
  const std::vector<std::string> contract{"dims T",           "dims I_f",          "base points",
                                          "base locus on K",  "sample residual",   "pencil membership",
                                          "residual point",   "irreducible curves", "base residual on E"};

  with_reseed(rep, opts.seed, contract, [&](std::uint64_t fs, Report& r) {
    auto t = Clock::now();
    const auto f = random_form(ring, Side::S, {3, 6}, fs);
    r.data["form"] = to_json(f);
    const auto ctx = build_f1_context(f);
    ojson tdims, idims;
    for (const auto& [k, v] : ctx.t_dims) tdims[k] = v;
    for (const auto& [k, v] : ctx.ideal_dims) idims[k] = v;
    r.check("dims T",
            ctx.t_dims.at("E+2F") == 5 && ctx.t_dims.at("2E+3F") == 9 && ctx.t_dims.at("E+3F") == 7 &&
                ctx.t_dims.at("3E+3F") == 10 && ctx.t_dims.at("3E+6F") == 22,
            tdims);
    r.check("dims I_f",
            ctx.ideal_dims.at("2E+3F") == 2 && ctx.ideal_dims.at("2E+2F") == 0 && ctx.ideal_dims.at("E+3F") == 0,
            idims);
    r.data["pencil"] = {to_json(ctx.pencil[0]), to_json(ctx.pencil[1])};
    r.time("context", seconds_since(t));

    t = Clock::now();
    std::optional<BasePointSet> base;
    try {
      base = pencil_basepoints(ctx);
      r.data["base_points"] = points_json(base->scheme);
      r.check("base points",
              base->intersection.count == 8 && base->scheme.size() == 8 && base->distinct && base->off_e &&
                  base->verdict.apolar && base->stack_rank == 8,
              {{"count", base->intersection.count}, {"distinct", base->distinct}, {"off_e", base->off_e},
               {"apolar", base->verdict.apolar}, {"span_residual", base->verdict.span_residual},
               {"stack_rank", base->stack_rank}, {"max_residual", base->intersection.max_residual}});
      const auto m = pencil_membership(ctx, base->scheme);
      r.check("base locus on K", m.rank == 0, {{"rank", m.rank}, {"sigma_max", m.sigma_max}});
    } catch (const std::logic_error& e) {
      r.check("base points", false, {{"reason", e.what()}});
    }
    r.time("base_points", seconds_since(t));

    t = Clock::now();
    try {
      const auto batch = vps_f1_samples(ctx, n, derive_seed(fs, {2}), opts.schedule, opts.restarts);
      const auto& ss = batch.samples;
      const bool all = ss.size() == n;
      ojson samples = ojson::array();
      for (const auto& s : ss)
        samples.push_back({{"points", points_json(s.decomposition.scheme)},
                           {"coefficients", complex_array(s.decomposition.coefficients)},
                           {"residual", s.decomposition.residual},
                           {"pencil_coordinates", complex_array({s.membership.coordinates.begin(),
                                                                 s.membership.coordinates.end()})},
                           {"residual_point", to_json(s.residual.point)}});
      r.data["samples"] = samples;
      const double res = max_of(ss, [](const F1Sample& s) { return s.decomposition.residual; });
      r.check("sample residual",
              all && res < 1e-8 && std::all_of(ss.begin(), ss.end(), [](const F1Sample& s) { return s.verdict.apolar; }),
              {{"samples", ss.size()}, {"rejected", batch.rejected}, {"max_residual", res}, {"threshold", 1e-8}});
      const double mem = max_of(ss, [](const F1Sample& s) { return s.membership.residual; });
      r.check("pencil membership",
              all && mem < 1e-8 && std::all_of(ss.begin(), ss.end(), [](const F1Sample& s) { return s.membership.rank == 1; }),
              {{"max_residual", mem}, {"threshold", 1e-8}});
      const double on = max_of(ss, [](const F1Sample& s) { return s.residual.on_curve; });
      r.check("residual point",
              all && on < 1e-7 && std::all_of(ss.begin(), ss.end(), [](const F1Sample& s) {
                return s.residual.n_dim == 2 && s.residual.intersection_count == 9;
              }),
              {{"max_on_curve", on}, {"threshold", 1e-7},
               {"min_separation", batch.min_residual_separation}});
      r.check("irreducible curves",
              all && std::all_of(ss.begin(), ss.end(), [](const F1Sample& s) { return s.irreducibility.irreducible; }),
              {{"samples", ss.size()}});

      if (base) {
        double worst = 0.0;
        bool ok = all;
        for (const auto& s : ss) {
          try {
            const auto rp = residual_point(ctx, base->scheme, s.membership.coordinates);
            worst = std::max(worst, point_distance(ring, rp.point, e_intersection(ctx, s.membership.coordinates)));
          } catch (const SampleRejected&) {
            ok = false;
          }
        }
        r.check("base residual on E", ok && worst < 1e-7, {{"max_distance", worst}, {"threshold", 1e-7}});
      }
    } catch (const SampleRejected& e) {
      for (const char* c : {"sample residual", "pencil membership", "residual point", "irreducible curves",
                            "base residual on E"})
        r.check(c, false, {{"reason", e.what()}});
    }
    r.time("samples", seconds_since(t));
  });
  rep.time("total", seconds_since(t0));
  return rep;
}

// ---------------------------------------------------------------------------

Report cmd_check(const std::string& form_text, const std::string& scheme_text, const Options& opts) {
  const auto t0 = Clock::now();
  const AnyForm form = parse_form(form_text);
  const AnyScheme scheme = parse_scheme(scheme_text, ring_of(form));
  const bool exact = std::holds_alternative<ExactForm>(form) && std::holds_alternative<ExactScheme>(scheme);

  const FloatForm ff = std::holds_alternative<ExactForm>(form) ? to_float(std::get<ExactForm>(form))
                                                              : std::get<FloatForm>(form);
  if (ff.side() != Side::S) throw std::invalid_argument("the form must be on the S side");
  const FloatScheme fsch = std::holds_alternative<ExactScheme>(scheme) ? to_float(std::get<ExactScheme>(scheme))
                                                                      : std::get<FloatScheme>(scheme);

  Report rep("check", opts);
  rep.surface = ff.ring().name();
  rep.degree = ff.degree();
  rep.data["exact"] = exact;
  rep.data["points"] = fsch.size();

  ApolarityVerdict v;
  bool agree = true;
  try {
    v = exact ? is_apolar(std::get<ExactScheme>(scheme), std::get<ExactForm>(form))
              : is_apolar(fsch, ff, opts.tol_res, opts.tol_rank);
  } catch (const std::logic_error& e) {
    agree = false;
    rep.data["disagreement"] = e.what();
  }
  rep.check("tests agree", agree && v.tests_agree,
            {{"ideal_test", v.ideal_test}, {"span_test", v.span_test}});
  ojson payload{{"ideal_residual", v.ideal_residual}, {"span_residual", v.span_residual}};
  if (!exact) payload["threshold"] = opts.tol_res;
  rep.check("apolar", agree && v.apolar, payload);

  if (exact) {
    const auto lemma = apolarity_lemma_check(std::get<ExactScheme>(scheme), std::get<ExactForm>(form));
    ojson lp{{"ideal_containment", lemma.ideal_containment}, {"degree_a_containment", lemma.degree_a_containment}};
    lp["first_failure"] = lemma.first_failure ? deg(*lemma.first_failure) : ojson();
    rep.check("lemma equivalence", lemma.equivalent && lemma.degree_a_containment == v.apolar, lp);
  }
  rep.time("total", seconds_since(t0));
  return rep;
}

}  // namespace apolar::cli
