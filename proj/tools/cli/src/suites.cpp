#include "arcwidom_cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "arcwidom/asymptotics.hpp"
#include "arcwidom/errors.hpp"
#include "arcwidom/extremal.hpp"
#include "arcwidom/extremal_formula.hpp"
#include "arcwidom/slit_potential.hpp"

namespace arcwidom::cli {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

ChartPoint reflect(const ChartPoint& u) {
  if (u.is_infinite()) return ChartPoint::u(0.0);
  if (u.value() == 0.0) return ChartPoint::infinity(Chart::U);
  return ChartPoint::u(1.0 / std::conj(u.value()));
}

double green_inf(const ChartPoint& u, const ArcGeometry& geom) {
  return asymptotics::envelope_limit(u, 0, geom).green;
}

VerificationReport start(const std::string& name, const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = name;
  rep.alpha = cfg.alpha;
  return rep;
}

void finish(VerificationReport& rep, Clock::time_point t0) {
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thiran-detaille", "szego-widom", "kernel",
                                              "finite-n",        "involution",  "subharmonicity"};
  return names;
}

std::vector<std::size_t> degree_ladder(std::size_t step, std::size_t nmax) {
  std::vector<std::size_t> out;
  for (std::size_t n = step; n < nmax; n += step) out.push_back(n);
  out.push_back(nmax);
  return out;
}

std::vector<cplx> szego_widom_test_points() {
  const double radii[4] = {0.3, 0.5, 2.0, 3.0};
  const int counts[4] = {13, 13, 12, 12};
  std::vector<cplx> pts;
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < counts[r]; ++k) {
      const double th = 2.0 * kPi * (k + 0.5) / counts[r] + 0.1 * r;
      pts.push_back(std::polar(radii[r], th));
    }
  }
  return pts;
}

VerificationReport suite_thiran_detaille(const RunConfig& cfg, SolveCache& cache) {
  const auto t0 = Clock::now();
  VerificationReport rep = start("thiran-detaille", cfg);
  rep.rule = "final |ratio - 1| within tolerance and the 3-window mean of |ratio - 1| non-increasing above 1e-9";
  const ArcGeometry geom = cfg.geometry();
  const std::size_t nmax = cfg.max_degree(30);
  std::vector<double> err;
  for (std::size_t n = std::min<std::size_t>(4, nmax); n <= nmax; ++n) {
    const SolveRecord rec = cache.solve(geom, n, ChartPoint::u(0.0), cfg.grid_m, cfg.grid_k, cfg.tol);
    const double norm = 1.0 / rec.value;
    const double td = asymptotics::thiran_detaille_norm(n, geom);
    err.push_back(std::abs(norm / td - 1.0));
    rep.add("T_n", n, norm, td, err.back(), 0.05);
  }
  bool monotone = true;
  for (std::size_t i = 1; i + 2 < err.size(); ++i) {
    const double prev = (err[i - 1] + err[i] + err[i + 1]) / 3.0;
    const double next = (err[i] + err[i + 1] + err[i + 2]) / 3.0;
    if (next > prev && next > 1e-9) monotone = false;
  }
  rep.passed = monotone && rep.rows.back().passed;
  finish(rep, t0);
  return rep;
}

VerificationReport suite_szego_widom(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  VerificationReport rep = start("szego-widom", cfg);
  rep.rule = "max deviation decreasing in n (or below 1e-10) and final row within tolerance";
  const ArcGeometry geom = cfg.geometry();
  const ChartPoint u0 = cfg.u0_list().front();
  const bool at_origin = !u0.is_infinite() && u0.value() == 0.0;
  // At u0 = 0 this is the limit of conj(b(u*, inf)^n P_{n,inf}(u*)), which the z-chart form presents.
  const LimitFunction limit(geom, u0, at_origin ? LimitForm::ZChart : LimitForm::Lambda);
  const std::vector<cplx> pts = szego_widom_test_points();
  const ChartPoint inf = ChartPoint::infinity(Chart::U);
  double prev = std::numeric_limits<double>::infinity();
  bool decreasing = true;
  for (std::size_t n : degree_ladder(5, cfg.max_degree(30))) {
    ExtremalSolver solver(geom, n, cfg.grid_m, cfg.grid_k, cfg.tol);
    const ExtremalSolution sol = solver.solve(u0);
    double worst = -1.0, lhs_w = 0.0, rhs_w = 0.0;
    for (const cplx& u : pts) {
      const ChartPoint p = ChartPoint::u(u);
      const double b = std::abs(conformal::b_omega_alpha(p, inf, geom));
      const double lhs = std::pow(b, static_cast<double>(n)) * std::abs(sol(u));
      const double rhs = std::abs(limit(p));
      if (std::abs(lhs - rhs) > worst) {
        worst = std::abs(lhs - rhs);
        lhs_w = lhs;
        rhs_w = rhs;
      }
    }
    rep.add("u0=" + format_u_point(u0), n, lhs_w, rhs_w, worst, 0.05);
    if (!(worst < prev) && worst > 1e-10) decreasing = false;
    prev = worst;
  }
  rep.passed = decreasing && rep.rows.back().passed;
  finish(rep, t0);
  return rep;
}

VerificationReport suite_kernel(const RunConfig& cfg, SolveCache& cache) {
  const auto t0 = Clock::now();
  VerificationReport rep = start("kernel", cfg);
  rep.rule = "relative error at the largest n within tolerance for every u0";
  const ArcGeometry geom = cfg.geometry();
  const std::vector<std::size_t> ladder = degree_ladder(5, cfg.max_degree(30));
  bool ok = true;
  for (const ChartPoint& u0 : cfg.u0_list()) {
    const double k = asymptotics::kernel_k(u0, u0, geom).real();
    const double g = green_inf(u0, geom);
    for (std::size_t n : ladder) {
      const SolveRecord rec = cache.solve(geom, n, u0, cfg.grid_m, cfg.grid_k, cfg.tol);
      const double scaled = std::exp(-static_cast<double>(n) * g) * rec.value;
      const VerificationRow& row = rep.add("u0=" + format_u_point(u0), n, scaled, k, std::abs(scaled / k - 1.0), 0.03);
      if (n == ladder.back()) ok = ok && row.passed;
    }
  }
  rep.passed = ok;
  finish(rep, t0);
  return rep;
}

VerificationReport suite_finite_n(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  VerificationReport rep = start("finite-n", cfg);
  rep.rule = "every row within tolerance; trivial degrees (no slit) are skipped";
  const ArcGeometry geom = cfg.geometry();
  const std::size_t nmax = cfg.max_degree(10);
  const std::vector<double> arc = uniform_arc_angles(geom.alpha(), 512);
  for (std::size_t n = 1; n <= nmax; ++n) {
    const SlitSystem sys = SlitSystem::create(n, geom);
    if (sys.trivial()) continue;
    const QnResult q = build_Qn(sys);
    ExtremalSolver solver(geom, n, cfg.grid_m, cfg.grid_k, std::min(cfg.tol, 1e-9));
    const ExtremalSolution sol = solver.solve(ChartPoint::u(0.0));

    rep.add("active", n, q.active_peak, 1.0, q.active_deviation, 1e-5);
    rep.add("global", n, q.sup_check, 1.0, std::max(0.0, q.sup_check - 1.0), 1e-6);
    rep.add("product", n, q.chart_value, sol.value, std::abs(q.chart_value - sol.value), 1e-4);
    double gap = 0.0, sup_pull = 0.0, sup_sol = 0.0;
    for (double th : arc) {
      const cplx u = std::polar(1.0, th);
      const cplx a = (*q.pullback)(u);
      const cplx b = sol(u);
      gap = std::max(gap, std::abs(a - b));
      sup_pull = std::max(sup_pull, std::abs(a));
      sup_sol = std::max(sup_sol, std::abs(b));
    }
    rep.add("pullback", n, sup_pull, sup_sol, gap, 1e-4);
  }
  rep.passed = rep.all_rows_pass();
  finish(rep, t0);
  return rep;
}

VerificationReport suite_involution(const RunConfig& cfg, SolveCache& cache) {
  const auto t0 = Clock::now();
  VerificationReport rep = start("involution", cfg);
  rep.rule = "every row within tolerance";
  const ArcGeometry geom = cfg.geometry();
  const std::size_t n = cfg.degree(12);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<cplx> c(n + 1);
    for (auto& x : c) x = cplx(normal(rng), normal(rng));
    const ComplexPoly p(c);
    const ComplexPoly ps = extremal::star(p, n);
    const ComplexPoly pss = extremal::star(ps, n);
    double scale = 0.0, diff = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      scale = std::max(scale, std::abs(c[k]));
      diff = std::max(diff, std::abs(pss.coefficient(k) - c[k]));
    }
    const double sup_p = arc_sup(p, geom.alpha(), 512).value;
    const double sup_ps = arc_sup(ps, geom.alpha(), 512).value;
    rep.add("star " + std::to_string(trial), n, sup_ps, sup_p, std::max(std::abs(sup_ps / sup_p - 1.0), diff / scale),
            1e-12);
  }
  const double tol = std::max(1e-9, 10.0 * cfg.tol);
  for (const ChartPoint& u0 : cfg.u0_list()) {
    const ChartPoint us = reflect(u0);
    const double a = cache.solve(geom, n, us, cfg.grid_m, cfg.grid_k, cfg.tol).value;
    double b = cache.solve(geom, n, u0, cfg.grid_m, cfg.grid_k, cfg.tol).value;
    if (!us.is_infinite() && !u0.is_infinite()) b *= std::pow(std::abs(us.value()), static_cast<double>(n));
    rep.add("L(" + format_u_point(us) + ")", n, a, b, std::abs(a / b - 1.0), tol);
  }
  rep.passed = rep.all_rows_pass();
  finish(rep, t0);
  return rep;
}

VerificationReport suite_subharmonicity(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  VerificationReport rep = start("subharmonicity", cfg);
  rep.rule = "every circle mean at least the centre value minus tolerance";
  const ArcGeometry geom = cfg.geometry();
  const std::vector<std::size_t> degrees = cfg.n ? std::vector<std::size_t>{*cfg.n} : std::vector<std::size_t>{5, 15};
  constexpr int kCircles = 100;
  constexpr int kSamples = 64;
  const ChartPoint inf = ChartPoint::infinity(Chart::U);
  for (std::size_t n : degrees) {
    ExtremalSolver solver(geom, n, cfg.grid_m, cfg.grid_k, cfg.tol);
    auto f = [&](cplx u) {
      const ChartPoint p = ChartPoint::u(u);
      const double b = std::abs(conformal::b_omega_alpha(p, inf, geom));
      return static_cast<double>(n) * std::log(b) + std::log(solver.solve(p).value);
    };
    std::mt19937_64 rng(0xc1c1e + n);
    std::uniform_real_distribution<double> radius(0.1, 3.0), angle(-kPi, kPi), shrink(0.2, 1.0);
    for (int c = 0; c < kCircles;) {
      const cplx centre = std::polar(radius(rng), angle(rng));
      const double d = geom.distance_to_arc(centre);
      if (d < 0.02) continue;
      const double rho = 0.1 * d * shrink(rng);
      double mean = 0.0;
      for (int k = 0; k < kSamples; ++k) mean += f(centre + std::polar(rho, 2.0 * kPi * k / kSamples));
      mean /= kSamples;
      const double mid = f(centre);
      rep.add("circle " + std::to_string(c), n, mean, mid, std::max(0.0, mid - mean), 1e-3);
      ++c;
    }
  }
  rep.passed = rep.all_rows_pass();
  finish(rep, t0);
  return rep;
}

VerificationReport run_suite(const std::string& suite, const RunConfig& cfg, SolveCache& cache) {
  if (suite == "thiran-detaille") return suite_thiran_detaille(cfg, cache);
  if (suite == "szego-widom") return suite_szego_widom(cfg);
  if (suite == "kernel") return suite_kernel(cfg, cache);
  if (suite == "finite-n") return suite_finite_n(cfg);
  if (suite == "involution") return suite_involution(cfg, cache);
  if (suite == "subharmonicity") return suite_subharmonicity(cfg);
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace arcwidom::cli
