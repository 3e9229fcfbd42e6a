#include "arcwidom/extremal_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

constexpr double kPi = std::numbers::pi;

// Q(z)/E(z) computed in powers of 1/z for |z| > 1, which avoids overflow of
// z^n on the far part of A_0.
cplx weighted_ratio(const ComplexPoly& q, const std::vector<cplx>& zeros, cplx z) {
  const std::size_t n = zeros.size();
  if (std::abs(z) <= 1.0) {
    cplx e = 1.0;
    for (const cplx& r : zeros) e *= z - r;
    return q(z) / e;
  }
  const cplx zi = 1.0 / z;
  // Q(z)/z^n = sum_k q_k z^{k-n}, by Horner in 1/z.
  cplx lead = 0.0;
  for (std::size_t k = 0; k <= n; ++k) lead = lead * zi + q.coefficient(k);
  cplx e = 1.0;
  for (const cplx& r : zeros) e *= 1.0 - r * zi;
  return lead / e;
}

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Least-squares fit of degree-n coefficients to samples on |z| = radius.
std::vector<cplx> fit_on_circle(const std::vector<cplx>& z, const std::vector<cplx>& y, std::size_t n,
                                double radius) {
  const auto rows = static_cast<Eigen::Index>(z.size());
  const auto cols = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXcd v(rows, cols);
  Eigen::VectorXcd rhs(rows);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const cplx t = z[static_cast<std::size_t>(j)] / radius;
    cplx p = 1.0;
    for (Eigen::Index k = 0; k < cols; ++k) {
      v(j, k) = p;
      p *= t;
    }
    rhs(j) = y[static_cast<std::size_t>(j)];
  }
  const Eigen::VectorXcd c = v.colPivHouseholderQr().solve(rhs);
  std::vector<cplx> out(n + 1);
  double scale = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = c(static_cast<Eigen::Index>(k)) / scale;
    scale *= radius;
  }
  return out;
}

}  // namespace

cplx QnResult::ratio(cplx z, const SlitSystem& sys) const {
  return weighted_ratio(coeffs, sys.zeros(), z);
}

QnResult build_Qn(const SlitSystem& sys, const QnOptions& options) {
  if (sys.trivial()) throw DomainError("build_Qn: no slit exists for this degree (trivial regime)");
  const std::size_t n = sys.degree();
  const ArcGeometry& geom = sys.geometry();
  QnResult res;

  double rmax = 0.0;
  for (const Pole& p : sys.poles()) rmax = std::max(rmax, std::abs(p.point));
  res.fit_radius = options.fit_radius > 0.0 ? options.fit_radius : 1.5 * std::max(1.0, rmax);
  const double radius = res.fit_radius;

  auto samples = [&](std::size_t count, double offset, std::vector<cplx>& z, std::vector<cplx>& y) {
    z.resize(count);
    y.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
      const double th = 2.0 * kPi * (static_cast<double>(j) + offset) / static_cast<double>(count);
      z[j] = std::polar(radius, th);
      y[j] = sys.weight(z[j]) * sys.formula_ratio(z[j]);
    }
  };
  std::vector<cplx> zf, yf, zh, yh;
  samples(8 * (n + 1), 0.5, zf, yf);
  samples(4 * (n + 1), 0.25, zh, yh);
  std::vector<cplx> q = fit_on_circle(zf, yf, n, radius);

  const ComplexPoly raw(q);
  double misfit = 0.0;
  double size = 0.0;
  for (std::size_t j = 0; j < zh.size(); ++j) {
    misfit = std::max(misfit, std::abs(raw(zh[j]) - yh[j]));
    size = std::max(size, std::abs(yh[j]));
  }
  res.fit_residual = misfit / size;
  if (!(res.fit_residual <= options.max_fit_residual)) {
    throw NumericalError("extremal formula is not a degree-" + std::to_string(n) +
                         " polynomial: held-out residual " + format_real(res.fit_residual) +
                         " (x_n = " + format_real(sys.x_n()) + ", psi = " + format_real(sys.formula_phase()) + ")");
  }

  // Normalise so that b_{Omega_alpha}(0, inf)^n P(0) > 0.
  const cplx z0 = geom.z0();
  const cplx p0 = raw(z0) / sys.weight(z0);
  const cplx bn = std::pow(conformal::b_omega_alpha(ChartPoint::u(0.0), ChartPoint::infinity(Chart::U), geom),
                           static_cast<double>(n));
  res.phase = -std::arg(bn * p0);
  const cplx rot = std::polar(1.0, res.phase);
  for (auto& c : q) c *= rot;
  res.coeffs = ComplexPoly(q);

  res.attained = std::abs(res.coeffs(z0));
  // Green's function symmetry lets every term reuse a stored pole measure.
  double gsum = 0.0;
  for (const Pole& p : sys.poles()) gsum += static_cast<double>(p.multiplicity) * sys.green(z0, p.point);
  res.chart_value = std::exp(gsum);
  res.product = std::abs(sys.weight(z0)) * res.chart_value;

  if (sys.default_weight()) {
    // Q(z)/E(z) = sum_k q_k (u conj z0 - z0)^k (u - 1)^{n-k} / (conj z0 - z0)^n.
    const cplx d = geom.z_inf() - z0;
    const std::vector<cplx> a{-z0 / d, geom.z_inf() / d};
    const std::vector<cplx> b{-1.0 / d, 1.0 / d};
    std::vector<cplx> out(n + 1, cplx(0.0));
    std::vector<std::vector<cplx>> apow(n + 1), bpow(n + 1);
    apow[0] = bpow[0] = {cplx(1.0)};
    for (std::size_t k = 1; k <= n; ++k) {
      apow[k] = poly_mul(apow[k - 1], a);
      bpow[k] = poly_mul(bpow[k - 1], b);
    }
    for (std::size_t k = 0; k <= n; ++k) {
      const std::vector<cplx> term = poly_mul(apow[k], bpow[n - k]);
      for (std::size_t j = 0; j < term.size(); ++j) out[j] += q[k] * term[j];
    }
    res.pullback = ComplexPoly(std::move(out));
  }

  // A_0 is the image of the arc, so scan it through the u chart.
  auto on_a0 = [&](cplx u) -> cplx {
    const ChartPoint z = conformal::z_from_u(ChartPoint::u(u), geom);
    if (z.is_infinite()) return res.at_infinity();
    return weighted_ratio(res.coeffs, sys.zeros(), z.value());
  };
  const ArcSup sup = arc_sup(on_a0, geom.alpha(), options.a0_scan);
  res.sup_check = sup.value;
  // The same scan on the closed formula itself, approached from inside the disc.
  auto formula_on_a0 = [&](cplx u) -> cplx {
    const cplx z = conformal::z_from_u(ChartPoint::u(u * (1.0 - 1e-13)), geom).value();
    return sys.formula_ratio(z);
  };
  res.formula_sup = arc_sup(formula_on_a0, geom.alpha(), options.a0_scan).value;
  for (double v : sup.peak_values) {
    if (v < 1.0 - 1e-3) continue;
    ++res.active_points;
    if (std::abs(v - 1.0) >= res.active_deviation) {
      res.active_deviation = std::abs(v - 1.0);
      res.active_peak = v;
    }
  }
  return res;
}

}  // namespace arcwidom
