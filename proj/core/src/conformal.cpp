#include "arcwidom/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(cplx v) { return format_complex(v); }

cplx w_derivative(cplx z, cplx wz) { return 1.0 / ((z + 1.0) * (z + 1.0) * wz); }

// b_{C+}(wz, wt) where zdiff = z - t is supplied separately so that the
// numerator can be formed without cancellation when wz is close to wt.
cplx b0_with_diff(cplx z, cplx wz, cplx t, cplx wt, cplx zdiff) {
  cplx num;
  if (std::abs(wz + wt) > std::abs(wz - wt)) {
    num = 2.0 * zdiff / ((z + 1.0) * (t + 1.0) * (wz + wt));
  } else {
    num = wz - wt;
  }
  const cplx den = wz - std::conj(wt);
  if (den == 0.0) throw SingularPointError("blaschke pole: w = conj(w1) at " + describe(wz));
  return num / den;
}

}  // namespace

const char* chart_name(Chart chart) {
  switch (chart) {
    case Chart::U:
      return "U";
    case Chart::Z:
      return "Z";
    case Chart::W:
      return "W";
    case Chart::Lambda:
      return "LAMBDA";
  }
  return "?";
}

ChartPoint ChartPoint::w(cplx value) {
  if (!(value.imag() >= 0.0)) {
    throw DomainError("W-chart point must lie in the closed upper half-plane: " + describe(value));
  }
  return {Chart::W, value, false};
}

ChartPoint ChartPoint::lambda(cplx value) {
  const double slack = 1e-14;
  if (value == 0.0 || !(std::abs(std::arg(value)) <= kPi / 4 + slack)) {
    throw DomainError("LAMBDA-chart point must lie in |arg| <= pi/4: " + describe(value));
  }
  return {Chart::Lambda, value, false};
}

ChartPoint ChartPoint::infinity(Chart chart) {
  if (chart != Chart::U && chart != Chart::Z) {
    throw DomainError(std::string("no point at infinity in chart ") + chart_name(chart));
  }
  return {chart, cplx(0.0, 0.0), true};
}

cplx ChartPoint::value() const {
  if (infinite_) throw DomainError("point at infinity has no finite value");
  return value_;
}

const ChartPoint& ChartPoint::require(Chart expected) const {
  if (chart_ != expected) {
    throw DomainError(std::string("expected a ") + chart_name(expected) + "-chart point, got " +
                      chart_name(chart_));
  }
  return *this;
}

ArcGeometry::ArcGeometry(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw DomainError("alpha must lie in (0, pi), got " + format_real(alpha));
  }
  z0_ = cplx(0.0, std::tan(alpha / 2));
  w0_ = std::polar(1.0, (kPi - alpha) / 2);
  const cplx winf = -std::conj(w0_);
  cap_ = std::abs(conformal::blaschke_halfplane(w0_, winf));
  // lim u b_raw(u, inf) = (conj z0 - z0) w'(conj z0) / (winf - conj winf).
  const cplx zi = std::conj(z0_);
  const cplx lead = (zi - z0_) * w_derivative(zi, winf) / (winf - std::conj(winf));
  infinity_phase_ = std::conj(lead) / std::abs(lead);
}

bool ArcGeometry::on_arc(cplx u) const {
  const double eps = 4 * std::numeric_limits<double>::epsilon();
  return std::abs(std::abs(u) - 1.0) <= eps && std::abs(std::arg(u)) <= alpha_;
}

double ArcGeometry::distance_to_arc(cplx u) const {
  if (std::abs(std::arg(u)) <= alpha_) return std::abs(std::abs(u) - 1.0);
  const cplx e = arc_endpoint();
  return std::min(std::abs(u - e), std::abs(u - std::conj(e)));
}

cplx SymmetryCircle::reflect(cplx z) const {
  if (degenerate) return -std::conj(z);
  return center + radius * radius / (std::conj(z) - center);
}

namespace conformal::raw {

bool on_A0(cplx z) { return z.imag() == 0.0 && std::abs(z.real()) >= 1.0; }

cplx w_of_z(cplx z) {
  if (on_A0(z)) throw SingularPointError("w(z) is undefined on A_0: " + describe(z));
  return cplx(0.0, 1.0) * std::sqrt(-(z - 1.0) / (z + 1.0));
}

cplx z_of_w(cplx w) {
  const cplx w2 = w * w;
  if (w2 == 1.0) throw SingularPointError("z(w) has a pole at w = +-1");
  return (1.0 + w2) / (1.0 - w2);
}

cplx w_difference(cplx z, cplx wz, cplx t, cplx wt) {
  if (std::abs(wz + wt) > std::abs(wz - wt)) {
    return 2.0 * (z - t) / ((z + 1.0) * (t + 1.0) * (wz + wt));
  }
  return wz - wt;
}

cplx b0(cplx z, cplx wz, cplx t, cplx wt) { return b0_with_diff(z, wz, t, wt, z - t); }

double slit_height(double t) { return std::sqrt((1.0 - t) / (1.0 + t)); }

double green0_real(double x, double t) {
  if (x == t) return kInf;
  return -std::log(std::abs(x - t)) + std::log((1.0 + x) * (1.0 + t) / 2.0) +
         2.0 * std::log(slit_height(x) + slit_height(t));
}

}  // namespace conformal::raw

namespace conformal {

ChartPoint u_from_z(const ChartPoint& z, const ArcGeometry& geom) {
  z.require(Chart::Z);
  if (z.is_infinite()) return ChartPoint::u(1.0);
  const cplx zv = z.value();
  const cplx zi = geom.z_inf();
  if (zv == zi) return ChartPoint::infinity(Chart::U);
  return ChartPoint::u((zv - geom.z0()) / (zv - zi));
}

ChartPoint z_from_u(const ChartPoint& u, const ArcGeometry& geom) {
  u.require(Chart::U);
  if (u.is_infinite()) return ChartPoint::z(geom.z_inf());
  const cplx uv = u.value();
  if (uv == 1.0) return ChartPoint::infinity(Chart::Z);
  return ChartPoint::z((uv * geom.z_inf() - geom.z0()) / (uv - 1.0));
}

ChartPoint w_from_z(const ChartPoint& z) {
  z.require(Chart::Z);
  if (z.is_infinite()) throw SingularPointError("w(z) is undefined at z = infinity (on A_0)");
  return ChartPoint::w(raw::w_of_z(z.value()));
}

ChartPoint lambda_from_u(const ChartPoint& u, const ArcGeometry& geom) {
  u.require(Chart::U);
  const cplx e = geom.arc_endpoint();
  cplx ratio;
  if (u.is_infinite()) {
    ratio = e;
  } else {
    const cplx uv = u.value();
    if (geom.on_arc(uv)) {
      throw SingularPointError("lambda(u) is undefined on the arc: " + describe(uv));
    }
    ratio = (uv * e - 1.0) / (uv - e);
    if (ratio.imag() == 0.0 && ratio.real() <= 0.0) {
      throw SingularPointError("lambda(u) is undefined on the arc: " + describe(uv));
    }
  }
  return ChartPoint::lambda(std::polar(std::pow(std::abs(ratio), 0.25), std::arg(ratio) / 4));
}

cplx blaschke_halfplane(cplx w, cplx w1) {
  const cplx den = w - std::conj(w1);
  if (den == 0.0) throw SingularPointError("blaschke pole: w = conj(w1) at " + describe(w));
  return (w - w1) / den;
}

double green_halfplane(cplx w, cplx w1) {
  if (w == w1) return kInf;
  return -std::log(std::abs(blaschke_halfplane(w, w1)));
}

cplx b_omega0(const ChartPoint& z, const ChartPoint& z1) {
  z.require(Chart::Z);
  z1.require(Chart::Z);
  const cplx zv = z.value();
  const cplx tv = z1.value();
  return raw::b0(zv, raw::w_of_z(zv), tv, raw::w_of_z(tv));
}

double green_omega0(const ChartPoint& z, const ChartPoint& z1) {
  z.require(Chart::Z);
  z1.require(Chart::Z);
  if (!z.is_infinite() && !z1.is_infinite() && z.value() == z1.value()) return kInf;
  return -std::log(std::abs(b_omega0(z, z1)));
}

cplx b_omega_alpha(const ChartPoint& u, const ChartPoint& u1, const ArcGeometry& geom) {
  u.require(Chart::U);
  u1.require(Chart::U);
  if (u.is_infinite() && u1.is_infinite()) return 0.0;
  const cplx dz = geom.z_inf() - geom.z0();
  if (u.is_infinite()) {
    const cplx u1v = u1.value();
    if (geom.on_arc(u1v)) throw DomainError("u1 lies on the arc: " + describe(u1v));
    const cplx t = z_from_u(u1, geom).value();
    const cplx diff = -dz / (u1v - 1.0);  // conj z0 - t
    return b0_with_diff(geom.z_inf(), geom.w_inf(), t, raw::w_of_z(t), diff);
  }

  const cplx uv = u.value();
  if (geom.on_arc(uv)) throw DomainError("u lies on the arc: " + describe(uv));
  const cplx z = z_from_u(u, geom).value();
  const cplx wz = raw::w_of_z(z);

  if (u1.is_infinite()) {
    const cplx diff = dz / (uv - 1.0);  // z - conj z0
    return geom.infinity_phase() * b0_with_diff(z, wz, geom.z_inf(), geom.w_inf(), diff);
  }
  const cplx u1v = u1.value();
  if (geom.on_arc(u1v)) throw DomainError("u1 lies on the arc: " + describe(u1v));
  const cplx t = z_from_u(u1, geom).value();
  const cplx diff = (uv - u1v) * (-dz) / ((uv - 1.0) * (u1v - 1.0));
  return b0_with_diff(z, wz, t, raw::w_of_z(t), diff);
}

double green_omega_alpha(const ChartPoint& u, const ChartPoint& u1, const ArcGeometry& geom) {
  u.require(Chart::U);
  u1.require(Chart::U);
  if (u.is_infinite() && u1.is_infinite()) return kInf;
  if (!u.is_infinite() && !u1.is_infinite() && u.value() == u1.value()) return kInf;
  return -std::log(std::abs(b_omega_alpha(u, u1, geom)));
}

SymmetryCircle symmetry_circle(cplx z_u0) {
  if (raw::on_A0(z_u0)) throw DomainError("z_u0 lies on A_0: " + describe(z_u0));
  SymmetryCircle k;
  const double re = z_u0.real();
  if (re == 0.0) {
    k.degenerate = true;
    k.center = kInf;
    k.radius = kInf;
    k.x0 = 0.0;
    return k;
  }
  const double c = (std::norm(z_u0) + 1.0) / (2.0 * re);
  if (!(std::abs(c) > 1.0)) {
    throw NumericalError("symmetry circle centre inside [-1, 1]: " + format_real(c));
  }
  k.center = c;
  k.radius = std::sqrt((std::abs(c) - 1.0) * (std::abs(c) + 1.0));
  k.x0 = std::copysign(1.0, c) / (std::abs(c) + k.radius);
  return k;
}

double capacity_probe(cplx u, const ArcGeometry& geom) {
  return std::abs(u * b_omega_alpha(ChartPoint::u(u), ChartPoint::infinity(Chart::U), geom));
}

}  // namespace conformal

}  // namespace arcwidom
