#include "arcwidom/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// g with g.p = Re P(u0) (or Re of the u^n coefficient for u0 = infinity).
Eigen::VectorXd objective_vector(const ArcBasis& basis, const ChartPoint& u0) {
  const std::size_t n = basis.degree();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * (n + 1)));
  if (u0.is_infinite()) {
    g(static_cast<Eigen::Index>(2 * n)) = basis.leading(n);
    return g;
  }
  const std::vector<cplx> q = basis.values(u0.value());
  for (std::size_t k = 0; k <= n; ++k) {
    g(static_cast<Eigen::Index>(2 * k)) = q[k].real();
    g(static_cast<Eigen::Index>(2 * k + 1)) = -q[k].imag();
  }
  return g;
}

cplx objective_value(const ArcBasis& basis, const std::vector<cplx>& c, const ChartPoint& u0) {
  const std::size_t n = basis.degree();
  return u0.is_infinite() ? c[n] * basis.leading(n) : basis.evaluate(c, u0.value());
}

struct ContactPoint {
  double theta;
  bool fixed;  // arc endpoints do not move
  double mu;
};

struct Polished {
  std::vector<cplx> c;
  std::vector<ContactPoint> points;
  double upper = 0.0;  // in units of the normalised objective
  double residual = 0.0;
};

// Newton's method on the optimality system of  max g.p  s.t. |P|^2/2 <= 1/2
// with a fixed active set: g = sum mu_i grad F_i, F_i = 1/2 at every contact
// point, and dF/dtheta = 0 at interior ones.
std::optional<Polished> newton_polish(const ArcBasis& basis, double alpha, const Eigen::VectorXd& g,
                                      std::vector<cplx> c, std::vector<ContactPoint> pts) {
  using Eigen::Index;
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const std::size_t n = basis.degree();
  const Index np = static_cast<Index>(2 * (n + 1));
  const Index m = static_cast<Index>(pts.size());
  std::vector<Index> tcol(pts.size(), -1);
  Index nt = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].fixed) tcol[i] = nt++;
  }
  const Index dim = np + m + nt;

  VectorXd x(dim);
  for (std::size_t k = 0; k <= n; ++k) {
    x(static_cast<Index>(2 * k)) = c[k].real();
    x(static_cast<Index>(2 * k + 1)) = c[k].imag();
  }
  for (Index i = 0; i < m; ++i) {
    x(np + i) = pts[static_cast<std::size_t>(i)].mu;
    if (tcol[static_cast<std::size_t>(i)] >= 0) x(np + m + tcol[static_cast<std::size_t>(i)]) = pts[static_cast<std::size_t>(i)].theta;
  }

  std::vector<cplx> q, dq, d2q;
  auto system = [&](const VectorXd& y, VectorXd& r, MatrixXd* jac) {
    r.setZero(dim);
    r.head(np) = g;
    if (jac) jac->setZero(dim, dim);
    for (Index i = 0; i < m; ++i) {
      const std::size_t si = static_cast<std::size_t>(i);
      const Index ti = tcol[si];
      const double theta = ti >= 0 ? y(np + m + ti) : pts[si].theta;
      const double mu = y(np + i);
      const cplx u = std::polar(1.0, theta);
      basis.values_with_derivatives(u, q, dq, d2q);
      const cplx iu(-u.imag(), u.real());
      VectorXd v(np), w(np), v1(np), w1(np), v2(np), w2(np);
      for (std::size_t k = 0; k <= n; ++k) {
        const cplx Q = q[k];
        const cplx Q1 = iu * dq[k];
        const cplx Q2 = -u * dq[k] - u * u * d2q[k];
        const Index a = static_cast<Index>(2 * k);
        v(a) = Q.real(); v(a + 1) = -Q.imag();
        w(a) = Q.imag(); w(a + 1) = Q.real();
        v1(a) = Q1.real(); v1(a + 1) = -Q1.imag();
        w1(a) = Q1.imag(); w1(a + 1) = Q1.real();
        v2(a) = Q2.real(); v2(a + 1) = -Q2.imag();
        w2(a) = Q2.imag(); w2(a + 1) = Q2.real();
      }
      const VectorXd p = y.head(np);
      const double R = v.dot(p), I = w.dot(p);
      const double R1 = v1.dot(p), I1 = w1.dot(p);
      const double R2 = v2.dot(p), I2 = w2.dot(p);
      const VectorXd gradF = R * v + I * w;
      r.head(np) -= mu * gradF;
      r(np + i) = 0.5 * (R * R + I * I) - 0.5;
      VectorXd gradFt;
      double Ft = 0.0;
      if (ti >= 0) {
        Ft = R * R1 + I * I1;
        gradFt = R1 * v + R * v1 + I1 * w + I * w1;
        r(np + m + ti) = Ft;
      }
      if (!jac) continue;
      MatrixXd& J = *jac;
      J.topLeftCorner(np, np) -= mu * (v * v.transpose() + w * w.transpose());
      J.block(0, np + i, np, 1) = -gradF;
      J.block(np + i, 0, 1, np) = gradF.transpose();
      if (ti >= 0) {
        const Index tc = np + m + ti;
        J.block(0, tc, np, 1) = -mu * gradFt;
        J(np + i, tc) = Ft;
        J.block(tc, 0, 1, np) = gradFt.transpose();
        J(tc, tc) = R1 * R1 + I1 * I1 + R * R2 + I * I2;
      }
    }
  };

  VectorXd r;
  MatrixXd J;
  system(x, r, &J);
  double rn = r.norm();
  for (int it = 0; it < 40 && rn > 1e-14; ++it) {
    const VectorXd step = J.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) return std::nullopt;
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls, t *= 0.5) {
      VectorXd xt = x + t * step;
      bool inside = true;
      for (Index k = 0; k < nt; ++k) inside = inside && std::abs(xt(np + m + k)) < alpha;
      if (!inside) continue;
      VectorXd rt;
      system(xt, rt, nullptr);
      if (rt.norm() < (1.0 - 1e-4 * t) * rn) {
        x = std::move(xt);
        moved = true;
        break;
      }
    }
    if (!moved) break;
    system(x, r, &J);
    rn = r.norm();
  }
  if (!(rn < 1e-9)) return std::nullopt;

  Polished out;
  out.c.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    out.c[k] = cplx(x(static_cast<Index>(2 * k)), x(static_cast<Index>(2 * k + 1)));
  }
  // g = sum mu_i |P_i| a_i + r with unit columns a_i, so for any feasible p',
  // g.p' <= sum mu_i |P_i| + |r| |p'|, and |p'| <= 1 in the orthonormal basis.
  double bound = r.head(np).norm();
  out.points = std::move(pts);
  for (Index i = 0; i < m; ++i) {
    ContactPoint& cp = out.points[static_cast<std::size_t>(i)];
    cp.mu = x(np + i);
    if (tcol[static_cast<std::size_t>(i)] >= 0) cp.theta = x(np + m + tcol[static_cast<std::size_t>(i)]);
    bound += cp.mu * std::abs(basis.evaluate(out.c, std::polar(1.0, cp.theta)));
  }
  out.upper = bound;
  out.residual = rn;
  return out;
}

}  // namespace

void ExtremalProblem::validate() const {
  u0.require(Chart::U);
  if (!u0.is_infinite() && geom.on_arc(u0.value())) {
    throw DomainError("u0 lies on the arc: " + format_complex(u0.value()));
  }
  if (arc_grid_size() < 8 * (n + 1)) throw DomainError("arc grid must have at least 8(n+1) angles");
  if (grid_k < 32) throw DomainError("phase grid must have at least 32 phases");
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (max_rounds == 0) throw DomainError("max_rounds must be positive");
}

ExtremalSolver::ExtremalSolver(const ArcGeometry& geom, std::size_t n, std::size_t grid_m,
                               std::size_t grid_k, double tol, std::size_t max_rounds)
    : geom_(geom), n_(n), grid_m_(grid_m ? grid_m : 8 * (n + 1)), tol_(tol), max_rounds_(max_rounds) {
  ExtremalProblem check{geom, n, ChartPoint::u(0.0), grid_m_, grid_k, tol, max_rounds};
  check.validate();

  basis_ = std::make_shared<const ArcBasis>(geom.alpha(), n);
  lp_ = std::make_unique<lp::TrigColumnLP>(n);
  for (double theta : chebyshev_arc_angles(geom.alpha(), grid_m_)) {
    const std::size_t a = lp_->add_angle(theta, basis_->values(std::polar(1.0, theta)));
    for (std::size_t k = 0; k < grid_k; ++k) {
      lp_->add_column(a, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(grid_k));
    }
  }
  base_columns_ = lp_->num_columns();
  base_angles_ = lp_->num_angles();
}

ExtremalSolver::~ExtremalSolver() = default;
ExtremalSolver::ExtremalSolver(ExtremalSolver&&) noexcept = default;
ExtremalSolver& ExtremalSolver::operator=(ExtremalSolver&&) noexcept = default;

ExtremalSolution ExtremalSolver::solve(const ChartPoint& u0) {
  u0.require(Chart::U);
  if (!u0.is_infinite() && geom_.on_arc(u0.value())) {
    throw DomainError("u0 lies on the arc: " + format_complex(u0.value()));
  }
  const Eigen::VectorXd graw = objective_vector(*basis_, u0);
  const double gscale = graw.norm();
  if (!(gscale > 0.0) || !std::isfinite(gscale)) throw DomainError("u0 is too large to evaluate");
  // Cuts from earlier solves stay useful for nearby u0; drop them in bulk only
  // when the pool grows large.
  if (lp_->num_columns() > base_columns_ + 200 * (n_ + 1)) {
    lp_->prune_nonbasic(base_columns_, base_angles_);
  }
  lp_->set_rhs(graw / gscale);

  const std::size_t scan = 10 * grid_m_;
  const std::size_t iters0 = lp_->iterations();
  const Eigen::VectorXd g = graw / gscale;
  ExtremalSolution sol;
  std::vector<cplx> c;
  auto eval = [&](cplx u) { return basis_->evaluate(c, u); };
  ArcSup sup;
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t round = 1; round <= max_rounds_; ++round) {
    const auto status = lp_->solve();
    if (status != lp::TrigColumnLP::Status::Optimal) {
      throw NumericalError(std::string("extremal LP failed: ") + lp::status_name(status));
    }
    c = lp_->multiplier_poly();
    sup = arc_sup(eval, geom_.alpha(), scan);
    if (!(sup.value > 0.0)) throw NumericalError("extremal LP produced the zero polynomial");

    upper = lp_->objective() * gscale;
    lower = std::abs(objective_value(*basis_, c, u0)) / sup.value;
    sol.rounds = round;
    if (upper - lower <= tol_ * lower) {
      sol.converged = true;
      break;
    }
    const std::vector<cplx> lp_c = c;
    const ArcSup lp_sup = sup;
    if (polish(g, gscale, u0, scan, c, sup, lower, upper)) {
      sol.converged = upper - lower <= tol_ * lower;
      if (sol.converged) break;
    }
    if (round == max_rounds_) break;
    if (add_cuts(lp_c, lp_sup) == 0) break;
  }

  const cplx at = objective_value(*basis_, c, u0);
  cplx bn = 1.0;
  if (!u0.is_infinite()) {
    bn = std::pow(conformal::b_omega_alpha(u0, ChartPoint::infinity(Chart::U), geom_),
                  static_cast<double>(n_));
  }
  sol.phase = -std::arg(bn * at);
  const cplx rot = std::polar(1.0 / sup.value, sol.phase);
  for (auto& x : c) x *= rot;
  sol.basis = basis_;
  sol.basis_coeffs = c;
  sol.poly = basis_->to_monomial(c);
  sol.value = lower;
  sol.upper_bound = upper;
  sol.lp_iterations = lp_->iterations() - iters0;

  const ArcSup check = arc_sup(eval, geom_.alpha(), scan + 7);
  sol.norm_cert = check.value;
  for (double v : check.peak_values) {
    if (v > 1.0 - 10.0 * tol_) ++sol.active_peaks;
  }
  return sol;
}

bool ExtremalSolver::polish(const Eigen::VectorXd& g, double gscale, const ChartPoint& u0,
                            std::size_t scan, std::vector<cplx>& c, ArcSup& sup, double& lower,
                            double& upper) const {
  const double alpha = geom_.alpha();
  // Contact points: peaks of the LP polynomial that carry weight in the optimal basis.
  std::vector<ContactPoint> pts;
  for (std::size_t k = 0; k < sup.peak_angles.size(); ++k) {
    if (sup.peak_values[k] < (1.0 - 1e-2) * sup.value) continue;
    const double t = sup.peak_angles[k];
    pts.push_back({t, std::abs(t) >= alpha * (1.0 - 1e-12), 0.0});
  }
  if (pts.empty()) return false;
  const auto& bidx = lp_->basis();
  const Eigen::VectorXd& y = lp_->basic_values();
  for (std::size_t r = 0; r < bidx.size(); ++r) {
    if (bidx[r] < 0) continue;
    const double t = lp_->column_theta(static_cast<std::size_t>(bidx[r]));
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (std::abs(pts[i].theta - t) < std::abs(pts[best].theta - t)) best = i;
    }
    pts[best].mu += y(static_cast<Eigen::Index>(r)) * sup.value;
  }
  std::vector<cplx> start = c;
  for (auto& x : start) x /= sup.value;

  for (int attempt = 0; attempt < 4; ++attempt) {
    auto res = newton_polish(*basis_, alpha, g, start, pts);
    if (!res) return false;
    // A negative multiplier means the point is not really active.
    std::size_t worst = res->points.size();
    for (std::size_t i = 0; i < res->points.size(); ++i) {
      if (res->points[i].mu < 0.0 && (worst == res->points.size() || res->points[i].mu < res->points[worst].mu)) worst = i;
    }
    if (worst < res->points.size()) {
      pts = res->points;
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(worst));
      start = res->c;
      if (pts.empty()) return false;
      continue;
    }
    std::vector<cplx> cand = res->c;
    auto ev = [&](cplx u) { return basis_->evaluate(cand, u); };
    ArcSup s = arc_sup(ev, alpha, scan);
    std::vector<ContactPoint> missing;
    for (std::size_t k = 0; k < s.peak_angles.size(); ++k) {
      if (s.peak_values[k] <= 1.0 + 1e-11) continue;
      bool known = false;
      for (const auto& p : res->points) known = known || std::abs(p.theta - s.peak_angles[k]) < 1e-6;
      if (!known) {
        const double t = s.peak_angles[k];
        missing.push_back({t, std::abs(t) >= alpha * (1.0 - 1e-12), 0.0});
      }
    }
    if (!missing.empty()) {
      pts = res->points;
      pts.insert(pts.end(), missing.begin(), missing.end());
      start = res->c;
      continue;
    }
    const double lo = std::abs(objective_value(*basis_, cand, u0)) / s.value;
    const double up = res->upper * gscale;
    if (!(up >= lo) || !(up - lo < upper - lower)) return false;
    c = std::move(cand);
    sup = std::move(s);
    lower = lo;
    upper = up;
    return true;
  }
  return false;
}

std::size_t ExtremalSolver::add_cuts(const std::vector<cplx>& c, const ArcSup& sup) {
  auto eval = [&](cplx u) { return basis_->evaluate(c, u); };
  std::size_t added = 0;
  for (std::size_t k = 0; k < sup.peak_angles.size(); ++k) {
    const double excess = sup.peak_values[k] - 1.0;
    if (excess <= 0.0) continue;
    const double theta = sup.peak_angles[k];
    // Curvature of |P| at the peak sets how far the next iterate's peak can
    // drift; bracket it with two flanking cut angles.
    const double hd = 1e-4;
    const double f0 = sup.peak_values[k];
    const double fm = std::abs(eval(std::polar(1.0, std::max(-geom_.alpha(), theta - hd))));
    const double fp = std::abs(eval(std::polar(1.0, std::min(geom_.alpha(), theta + hd))));
    const double curv = std::max((2.0 * f0 - fm - fp) / (hd * hd), 1e-3);
    const double h = std::clamp(std::sqrt(2.0 * excess / curv), 1e-9, 0.05);
    const double spread = std::clamp(std::sqrt(2.0 * excess), 1e-7, 0.05);
    for (double t : {theta - h, theta, theta + h}) {
      if (t < -geom_.alpha() || t > geom_.alpha()) continue;
      const std::vector<cplx> q = basis_->values(std::polar(1.0, t));
      cplx val = 0.0;
      for (std::size_t j = 0; j <= n_; ++j) val += c[j] * q[j];
      const std::size_t a = lp_->add_angle(t, q);
      for (int f = -1; f <= 1; ++f) lp_->add_column(a, -std::arg(val) + f * spread);
    }
    ++added;
  }
  return added;
}


cplx ExtremalSolution::operator()(cplx u) const {
  if (basis) return basis->evaluate(basis_coeffs, u);
  return poly(u);
}

ExtremalSolution solve_extremal(const ExtremalProblem& prob) {
  prob.validate();
  ExtremalSolver solver(prob.geom, prob.n, prob.arc_grid_size(), prob.grid_k, prob.tol, prob.max_rounds);
  return solver.solve(prob.u0);
}

namespace extremal {

ComplexPoly star(const ComplexPoly& p, std::size_t n) { return p.star(n); }

double chebyshev_norm(std::size_t n, const ArcGeometry& geom, double tol) {
  if (n == 0) throw DomainError("chebyshev_norm needs n >= 1");
  ExtremalProblem prob{geom, n, ChartPoint::u(0.0), 0, 64, tol, 8};
  return 1.0 / solve_extremal(prob).value;
}

double envelope_at(const ChartPoint& u, std::size_t n, const ArcGeometry& geom, double tol) {
  ExtremalProblem prob{geom, n, u, 0, 64, tol, 8};
  return solve_extremal(prob).value;
}

std::size_t count_level_clusters(const ComplexPoly& p, double alpha, double level,
                                 std::size_t scan_points) {
  const std::vector<double> grid = uniform_arc_angles(alpha, scan_points);
  std::size_t clusters = 0;
  bool inside = false;
  for (double t : grid) {
    const bool above = std::abs(p(std::polar(1.0, t))) > level;
    if (above && !inside) ++clusters;
    inside = above;
  }
  return clusters;
}

}  // namespace extremal

}  // namespace arcwidom
