#include "arcwidom_cli/commands.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "arcwidom/asymptotics.hpp"
#include "arcwidom/errors.hpp"

namespace arcwidom::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::pair<double, double> coords(const ChartPoint& u) {
  if (u.is_infinite()) return {std::numeric_limits<double>::infinity(), 0.0};
  return {u.value().real(), u.value().imag()};
}

ChartPoint single_u0(const RunConfig& cfg) {
  const auto list = cfg.u0_list();
  if (list.size() != 1) throw DomainError("this command takes exactly one --u0");
  return list.front();
}

}  // namespace

std::vector<ChartPoint> default_limit_grid(const ArcGeometry& geom) {
  std::vector<ChartPoint> pts;
  for (double r : {0.25, 0.5, 0.75, 1.5, 2.0, 4.0}) {
    for (int k = 0; k < 12; ++k) pts.push_back(ChartPoint::u(std::polar(r, 2.0 * kPi * (k + 0.25) / 12.0)));
  }
  const double a = geom.alpha();
  for (int k = 0; k < 8; ++k) {
    // theta runs over (alpha, pi] and its mirror image.
    const double th = a + (kPi - a) * (k / 2 + 1) / 4.0;
    pts.push_back(ChartPoint::u(std::polar(1.0, k % 2 ? -th : th)));
  }
  return pts;
}

Table cmd_capacity(const RunConfig& cfg) {
  const ArcGeometry geom = cfg.geometry();
  Table t;
  t.command = "capacity";
  t.set("alpha", geom.alpha());
  t.columns = {"alpha", "cap", "cot_quarter", "tan_quarter", "re_z0", "im_z0", "re_w0", "im_w0"};
  const double tq = std::tan(geom.alpha() / 4.0);
  t.add_row({geom.alpha(), geom.cap(), 1.0 / tq, tq, geom.z0().real(), geom.z0().imag(), geom.w0().real(),
             geom.w0().imag()});
  return t;
}

Table cmd_solve(const RunConfig& cfg, SolveCache& cache) {
  const ArcGeometry geom = cfg.geometry();
  const ChartPoint u0 = single_u0(cfg);
  const std::size_t n = cfg.degree(10);
  const SolveRecord rec = cache.solve(geom, n, u0, cfg.grid_m, cfg.grid_k, cfg.tol);
  Table t;
  t.command = "solve";
  t.set("alpha", rec.alpha);
  t.set("n", rec.n);
  t.set("u0", rec.u0);
  t.set("grid_m", rec.grid_m);
  t.set("grid_k", rec.grid_k);
  t.set("tol", rec.tol);
  t.set("value", rec.value);
  t.set("upper_bound", rec.upper_bound);
  t.set("norm_cert", rec.norm_cert);
  t.set("phase", rec.phase);
  t.set("converged", rec.converged);
  t.set("rounds", rec.rounds);
  t.set("lp_iterations", rec.lp_iterations);
  t.set("active_peaks", rec.active_peaks);
  t.columns = {"k", "re_c", "im_c"};
  for (std::size_t k = 0; k < rec.coeffs.size(); ++k) t.add_row({k, rec.coeffs[k].real(), rec.coeffs[k].imag()});
  return t;
}

Table cmd_limit(const RunConfig& cfg) {
  const ArcGeometry geom = cfg.geometry();
  const ChartPoint u0 = cfg.u0_list().front();
  const LimitFunction f(geom, u0);
  Table t;
  t.command = "limit";
  t.set("alpha", geom.alpha());
  t.set("u0", format_u_point(u0));
  t.set("form", limit_form_name(f.form()));
  t.set("phase", f.phase());
  t.columns = {"re_u", "im_u", "re_F", "im_F", "abs_F", "g", "k_diag"};
  std::vector<ChartPoint> pts{u0};
  const std::vector<ChartPoint> grid = cfg.points.empty() ? default_limit_grid(geom) : cfg.points;
  pts.insert(pts.end(), grid.begin(), grid.end());
  for (const ChartPoint& u : pts) {
    const cplx v = f(u);
    const auto env = asymptotics::envelope_limit(u, 0, geom);
    const auto [re, im] = coords(u);
    t.add_row({re, im, v.real(), v.imag(), std::abs(v), env.green, env.kernel});
  }
  return t;
}

Table cmd_envelope(const RunConfig& cfg, SolveCache& cache) {
  const ArcGeometry geom = cfg.geometry();
  const std::size_t n = cfg.degree(10);
  Table t;
  t.command = "envelope";
  t.set("alpha", geom.alpha());
  t.set("n", n);
  t.columns = {"re_u", "im_u", "n", "L_n", "g", "k_diag", "asymptote", "ratio"};
  const std::vector<ChartPoint> pts = cfg.points.empty() ? cfg.u0_list() : cfg.points;
  for (const ChartPoint& u : pts) {
    const SolveRecord rec = cache.solve(geom, n, u, cfg.grid_m, cfg.grid_k, cfg.tol);
    const auto env = asymptotics::envelope_limit(u, n, geom);
    const auto [re, im] = coords(u);
    t.add_row({re, im, n, rec.value, env.green, env.kernel, env.value, rec.value / env.value});
  }
  return t;
}

VerificationReport cmd_verify(const std::string& suite, const RunConfig& cfg, SolveCache& cache) {
  return run_suite(suite, cfg, cache);
}

}  // namespace arcwidom::cli
