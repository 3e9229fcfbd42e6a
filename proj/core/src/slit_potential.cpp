#include "arcwidom/slit_potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/tools/toms748_solve.hpp>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

using conformal::raw::slit_height;
using conformal::raw::w_of_z;

// Smooth part of g_{Omega_0}(s, t) on (-1, 1)^2: g + log|s - t|.
double smooth_kernel(double s, double as, double t, double at) {
  return std::log((1.0 + s) * (1.0 + t) / 2.0) + 2.0 * std::log(as + at);
}

// T_0(s), ..., T_{m-1}(s).
void chebyshev_values(double s, std::size_t m, std::vector<double>& out) {
  out.resize(m);
  out[0] = 1.0;
  if (m > 1) out[1] = s;
  for (std::size_t k = 2; k < m; ++k) out[k] = 2.0 * s * out[k - 1] - out[k - 2];
}

double gauss_chebyshev_node(std::size_t j, std::size_t m) {
  return std::cos((2.0 * static_cast<double>(j) + 1.0) * kPi / (2.0 * static_cast<double>(m)));
}

// Never evaluate on the lower edge of a cut by accident.
cplx upper_zero(cplx z) { return z.imag() == 0.0 ? cplx(z.real(), 0.0) : z; }

double green0(cplx z, cplx p) {
  const cplx b = conformal::raw::b0(z, w_of_z(z), p, w_of_z(p));
  return -std::log(std::abs(b));
}

// Harmonic measure of (-1, 1) in the lower half-plane seen from p, the
// limiting slit mass as x -> 1.
double limiting_mass(cplx p) { return std::abs(std::arg((p - 1.0) / (p + 1.0))) / kPi; }

}  // namespace

BalayageOptions BalayageOptions::for_degree(std::size_t n) {
  BalayageOptions o;
  o.degree = n > 24 ? 64 : 32;
  return o;
}

SlitMeasure balayage_onto_slit(cplx pole, double x, const BalayageOptions& options) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("slit half-width must lie in (0, 1), got " + format_real(x));
  if (conformal::raw::on_A0(pole)) throw DomainError("pole lies on A_0: " + format_complex(pole));
  if (pole.imag() == 0.0 && std::abs(pole.real()) <= x) {
    throw DomainError("pole lies on the slit: " + format_complex(pole));
  }
  const std::size_t m = options.degree;
  const std::size_t nq = options.quadrature ? options.quadrature : 4 * m;
  if (m < 2) throw DomainError("balayage degree must be at least 2");
  if (nq < m) throw DomainError("balayage quadrature must have at least `degree` nodes");

  SlitMeasure out;
  out.x_ = x;
  out.pole_ = pole;
  out.nodes_.resize(nq);
  out.heights_.resize(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    out.nodes_[q] = gauss_chebyshev_node(q, nq);
    out.heights_[q] = slit_height(x * out.nodes_[q]);
  }
  std::vector<std::vector<double>> tq(nq);
  for (std::size_t q = 0; q < nq; ++q) chebyshev_values(out.nodes_[q], m, tq[q]);

  const auto mi = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd a(mi, mi);
  Eigen::VectorXd rhs(mi);
  const cplx wp = w_of_z(pole);
  std::vector<double> tj;
  std::vector<double> smooth(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double s = gauss_chebyshev_node(j, m);
    const double xs = x * s;
    const double as = slit_height(xs);
    chebyshev_values(s, m, tj);
    std::fill(smooth.begin(), smooth.end(), 0.0);
    for (std::size_t q = 0; q < nq; ++q) {
      const double r = smooth_kernel(xs, as, x * out.nodes_[q], out.heights_[q]);
      for (std::size_t k = 0; k < m; ++k) smooth[k] += tq[q][k] * r;
    }
    const auto ji = static_cast<Eigen::Index>(j);
    for (std::size_t k = 0; k < m; ++k) {
      // int -log|x s - x t| T_k(t) / sqrt(1 - t^2) dt
      const double logpart =
          k == 0 ? kPi * (std::log(2.0) - std::log(x)) : kPi / static_cast<double>(k) * tj[k];
      a(ji, static_cast<Eigen::Index>(k)) = logpart + kPi / static_cast<double>(nq) * smooth[k];
    }
    rhs(ji) = -std::log(std::abs(conformal::raw::b0(cplx(xs, 0.0), cplx(0.0, as), pole, wp)));
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  out.condition_ = sv(0) / sv(mi - 1);
  const Eigen::VectorXd c = a.partialPivLu().solve(rhs);
  if (!c.allFinite()) throw NumericalError("balayage collocation system is singular");
  out.coeffs_.assign(c.data(), c.data() + m);
  out.mass_ = kPi * out.coeffs_[0];

  out.phi_.resize(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    double v = 0.0;
    for (std::size_t k = 0; k < m; ++k) v += out.coeffs_[k] * tq[q][k];
    out.phi_[q] = v;
  }
  return out;
}

double SlitMeasure::density(double t) const {
  if (!(std::abs(t) < x_)) return 0.0;
  std::vector<double> tk;
  chebyshev_values(t / x_, coeffs_.size(), tk);
  double v = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v += coeffs_[k] * tk[k];
  return v / std::sqrt(x_ * x_ - t * t);
}

cplx SlitMeasure::log_potential(cplx z) const {
  z = upper_zero(z);
  // log(z - t) part, integrated term by term against the Chebyshev density.
  const cplx zeta = z / x_;
  const cplx rho = zeta + std::sqrt(zeta - 1.0) * std::sqrt(zeta + 1.0);
  cplx acc = kPi * coeffs_[0] * (std::log(x_) + std::log(rho / 2.0));
  const cplx rinv = 1.0 / rho;
  cplx rk = 1.0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    rk *= rinv;
    acc -= kPi * coeffs_[k] * rk / static_cast<double>(k);
  }
  // log b0(z, t) - log(z - t) = log 2 - log(z + 1) - log(1 + t) - 2 log(w(z) + i a(t)).
  const cplx wz = w_of_z(z);
  const cplx common = std::log(2.0) - std::log(z + 1.0);
  cplx smooth = 0.0;
  for (std::size_t q = 0; q < nodes_.size(); ++q) {
    const double t = x_ * nodes_[q];
    smooth += phi_[q] * (common - std::log1p(t) - 2.0 * std::log(wz + kI * heights_[q]));
  }
  return acc + kPi / static_cast<double>(nodes_.size()) * smooth;
}

double SlitMeasure::potential(cplx z) const { return -log_potential(z).real(); }

std::optional<double> solve_xn(const std::vector<Pole>& poles, const BalayageOptions& options) {
  if (poles.empty()) throw DomainError("solve_xn needs at least one pole");
  double limit = 0.0;
  for (const Pole& p : poles) limit += static_cast<double>(p.multiplicity) * limiting_mass(p.point);
  // At limit == 1 the root sits at x = 1; rounding must not turn that into a slit.
  if (limit <= 1.0 + 1e-9) return std::nullopt;

  auto f = [&](double logx) {
    const double x = std::exp(logx);
    double s = 0.0;
    for (const Pole& p : poles) {
      s += static_cast<double>(p.multiplicity) * balayage_onto_slit(p.point, x, options).mass();
    }
    return s - 1.0;
  };
  double lo = std::log(1e-280);
  double flo = f(lo);
  if (flo >= 0.0) throw NumericalError("slit mass exceeds one even for a vanishing slit");
  double hi = std::log(0.5);
  double fhi = f(hi);
  for (double gap = 0.1; fhi < 0.0 && gap >= 1e-8; gap /= 10.0) {
    lo = hi;
    flo = fhi;
    hi = std::log1p(-gap);
    fhi = f(hi);
  }
  if (fhi < 0.0) throw NumericalError("slit half-width root lies within 1e-8 of 1");
  if (fhi == 0.0) return std::exp(hi);

  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(50), iters);
  return std::exp(0.5 * (bracket.first + bracket.second));
}

std::optional<double> solve_xn(std::size_t n, const ArcGeometry& geom) {
  return solve_xn({Pole{geom.z_inf(), n + 1}}, BalayageOptions::for_degree(n));
}

SlitSystem SlitSystem::create(std::size_t n, const ArcGeometry& geom, std::vector<cplx> zeros,
                              std::optional<BalayageOptions> options) {
  SlitSystem sys;
  sys.n_ = n;
  sys.geom_ = geom;
  sys.options_ = options.value_or(BalayageOptions::for_degree(n));
  sys.default_weight_ = zeros.empty();
  if (zeros.empty()) zeros.assign(n, geom.z_inf());
  if (zeros.size() != n) throw DomainError("E_n must have exactly n zeros");
  for (const cplx& z : zeros) {
    if (!(z.imag() < 0.0)) throw DomainError("zeros of E_n must lie in the open lower half-plane");
  }
  sys.zeros_ = zeros;

  std::vector<cplx> all = zeros;
  all.push_back(geom.z_inf());
  for (const cplx& p : all) {
    auto it = std::find_if(sys.poles_.begin(), sys.poles_.end(), [&](const Pole& q) { return q.point == p; });
    if (it == sys.poles_.end()) {
      sys.poles_.push_back({p, 1});
    } else {
      ++it->multiplicity;
    }
  }
  sys.x_ = solve_xn(sys.poles_, sys.options_);
  if (!sys.x_) return sys;
  for (const Pole& p : sys.poles_) sys.measures_.push_back(balayage_onto_slit(p.point, *sys.x_, sys.options_));

  const double x = *sys.x_;
  const cplx z0 = geom.z0();
  sys.s_scale_ = z0 * std::sqrt(1.0 - x * x / (z0 * z0)) / std::sqrt(1.0 - z0 * z0);

  // Continuity of Q_n across A_0 forces I(a + i0) I(a - i0) u R e^{2 i psi} = -1.
  const double a = 5.0 / 3.0;
  const double eps = 1e-14;
  const cplx above = sys.blaschke_product(cplx(a, eps));
  const cplx below = sys.blaschke_product(cplx(a, -eps));
  const cplx ua = (a - z0) / (a - geom.z_inf());
  const cplx b = above * below * ua * sys.weight_reflected(a) / sys.weight(a);
  sys.psi_ = 0.5 * (kPi - std::arg(b));
  return sys;
}

double SlitSystem::x_n() const {
  if (!x_) throw DomainError("no slit: (n, poles) is in the trivial regime");
  return *x_;
}

double SlitSystem::mass_sum() const {
  double s = 0.0;
  for (std::size_t l = 0; l < poles_.size(); ++l) {
    s += static_cast<double>(poles_[l].multiplicity) * measures_[l].mass();
  }
  return s;
}

cplx SlitSystem::weight(cplx z) const {
  cplx e = 1.0;
  for (const cplx& r : zeros_) e *= z - r;
  return e;
}

cplx SlitSystem::weight_reflected(cplx z) const {
  cplx e = 1.0;
  for (const cplx& r : zeros_) e *= z - std::conj(r);
  return e;
}

const SlitMeasure& SlitSystem::measure_for(cplx z1, SlitMeasure& scratch) const {
  for (std::size_t l = 0; l < poles_.size(); ++l) {
    if (poles_[l].point == z1) return measures_[l];
  }
  scratch = balayage_onto_slit(z1, x_n(), options_);
  return scratch;
}

double SlitSystem::green(cplx z, cplx z1) const {
  x_n();
  if (z == z1) return std::numeric_limits<double>::infinity();
  SlitMeasure scratch;
  const SlitMeasure& nu = measure_for(z1, scratch);
  return green0(z, z1) - nu.potential(z);
}

cplx SlitSystem::complex_green(cplx z, cplx z1) const {
  SlitMeasure scratch;
  const SlitMeasure& nu = measure_for(z1, scratch);
  z = upper_zero(z);
  const cplx b = conformal::raw::b0(z, w_of_z(z), z1, w_of_z(z1));
  return b * std::exp(-nu.log_potential(z));
}

int SlitSystem::cut_winding(const std::vector<cplx>& path) const {
  const double x = x_n();
  if (path.empty()) throw DomainError("empty path");
  const cplx start = path.front();
  if (!(start.imag() == 0.0 && start.real() > x && start.real() < 1.0)) {
    throw DomainError("path must start on (x_n, 1), got " + format_complex(start));
  }
  auto check_real = [&](double r) {
    if (std::abs(r) >= 1.0 || std::abs(r) <= x) {
      throw DomainError("path meets the boundary of Omega_n at " + format_real(r));
    }
  };
  int winding = 0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const cplx p = upper_zero(path[k - 1]);
    const cplx q = upper_zero(path[k]);
    if (q.imag() == 0.0) check_real(q.real());
    const bool p_below = std::signbit(p.imag());
    const bool q_below = std::signbit(q.imag());
    if (p.imag() == 0.0 && q.imag() == 0.0) {
      // A segment along the axis must stay inside one gap.
      if ((p.real() > 0.0) != (q.real() > 0.0)) check_real(0.0);
      continue;
    }
    if (p_below == q_below) continue;
    const double t = p.imag() / (p.imag() - q.imag());
    const double r = p.real() + t * (q.real() - p.real());
    check_real(r);
    if (r < 0.0) winding += q_below ? 1 : -1;
  }
  return winding;
}

cplx SlitSystem::log_complex_green_along(const std::vector<cplx>& path, cplx z1) const {
  const int winding = cut_winding(path);
  SlitMeasure scratch;
  const SlitMeasure& nu = measure_for(z1, scratch);
  const cplx w1 = w_of_z(z1);
  auto b0 = [&](cplx z) {
    z = upper_zero(z);
    return conformal::raw::b0(z, w_of_z(z), z1, w1);
  };
  // Unwrap arg b0 with steps small enough that its phase moves by < pi/4.
  double arg = std::arg(b0(path.front()));
  cplx prev = b0(path.front());
  for (std::size_t k = 1; k < path.size(); ++k) {
    const cplx p = path[k - 1];
    const cplx q = path[k];
    double t = 0.0;
    double h = 1.0 / 16.0;
    while (t < 1.0) {
      const double step = std::min(h, 1.0 - t);
      const cplx next = b0(p + (t + step) * (q - p));
      if (next == 0.0) throw DomainError("path passes through the pole");
      const double d = std::arg(next / prev);
      if (std::abs(d) > kPi / 4 && step > 1e-12) {
        h = step / 2;
        continue;
      }
      arg += d;
      prev = next;
      t += step;
      if (std::abs(d) < kPi / 16) h = std::min(2 * step, 0.25);
    }
  }
  const cplx z = upper_zero(path.back());
  const cplx lb0(std::log(std::abs(prev)), arg);
  return lb0 - (nu.log_potential(z) + cplx(0.0, 2.0 * kPi * nu.mass() * winding));
}

cplx SlitSystem::s_n(cplx z) const {
  const double x = x_n();
  z = upper_zero(z);
  if (z.imag() == 0.0 && (std::abs(std::abs(z.real()) - x) == 0.0 || std::abs(z.real()) == 1.0)) {
    throw SingularPointError("s_n has a branch point at " + format_complex(z));
  }
  if (z == 0.0) throw SingularPointError("s_n is evaluated on the slit at 0");
  return z * std::sqrt(1.0 - x * x / (z * z)) / std::sqrt(1.0 - z * z) / s_scale_;
}

cplx SlitSystem::blaschke_product(cplx z) const {
  z = upper_zero(z);
  const cplx wz = w_of_z(z);
  cplx prod = 1.0;
  cplx logs = 0.0;
  for (std::size_t l = 0; l < poles_.size(); ++l) {
    const cplx b = conformal::raw::b0(z, wz, poles_[l].point, w_of_z(poles_[l].point));
    const double m = static_cast<double>(poles_[l].multiplicity);
    prod *= std::pow(b, m);
    logs += m * measures_[l].log_potential(z);
  }
  return prod * std::exp(-logs);
}

cplx SlitSystem::formula_from(cplx z, cplx prod) const {
  const cplx s = s_n(z);
  const cplx e = std::polar(1.0, psi_);
  const cplx u = (z - geom_.z0()) / (z - geom_.z_inf());
  const cplx r = weight_reflected(z) / weight(z);
  return (1.0 + s) / (2.0 * s) / (prod * e) + (1.0 - s) / (2.0 * s) * u * r * prod * e;
}

cplx SlitSystem::formula_ratio(cplx z) const { return formula_from(upper_zero(z), blaschke_product(z)); }

cplx SlitSystem::formula_ratio_along(const std::vector<cplx>& path) const {
  const int winding = cut_winding(path);
  const cplx z = upper_zero(path.back());
  cplx prod = blaschke_product(z);
  // Continuing each log potential across the cut shifts it by 2 pi i mass.
  prod *= std::exp(cplx(0.0, -2.0 * kPi * mass_sum() * winding));
  return formula_from(z, prod);
}

}  // namespace arcwidom
