#include "arcwidom/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

namespace raw = conformal::raw;

constexpr double kPi = std::numbers::pi;

// Distance from z to A_0 = R \ (-1, 1).
double distance_to_A0(cplx z) {
  if (std::abs(z.real()) >= 1.0) return std::abs(z.imag());
  return std::min(std::abs(z - 1.0), std::abs(z + 1.0));
}

// Reflection in the unit circle, extended to 0 and infinity.
ChartPoint reflect_u(const ChartPoint& u) {
  if (u.is_infinite()) return ChartPoint::u(0.0);
  const cplx v = u.value();
  if (v == 0.0) return ChartPoint::infinity(Chart::U);
  return ChartPoint::u(1.0 / std::conj(v));
}

cplx z_of(const ChartPoint& u, const ArcGeometry& geom) {
  if (!u.is_infinite() && geom.on_arc(u.value())) {
    throw DomainError("u lies on the arc: " + format_complex(u.value()));
  }
  return conformal::z_from_u(u, geom).value();
}

}  // namespace

const char* limit_form_name(LimitForm form) {
  switch (form) {
    case LimitForm::Lambda: return "lambda";
    case LimitForm::LambdaFactored: return "lambda-factored";
    case LimitForm::ZChart: return "z-chart";
    case LimitForm::WChart: return "w-chart";
  }
  return "?";
}

LimitFunction::LimitFunction(const ArcGeometry& geom, const ChartPoint& u0, LimitForm form)
    : geom_(geom), u0_(u0), form_(form) {
  u0.require(Chart::U);
  ChartPoint ref = u0;
  if (!u0.is_infinite()) {
    const double r = std::abs(u0.value());
    if (std::abs(r - 1.0) <= 1e-12) {
      throw DomainError("LimitFunction: u0 must be off the unit circle, got " + format_complex(u0.value()));
    }
    reflected_ = r > 1.0;
  } else {
    reflected_ = true;
  }
  if (reflected_) ref = reflect_u(u0);

  z_ref_ = z_of(ref, geom_);
  w_ref_ = raw::w_of_z(z_ref_);
  lambda_ref_ = std::sqrt(cplx(0.0, -1.0) * w_ref_);
  x0_ = conformal::symmetry_circle(z_ref_).x0;
  s_scale_ = (z_ref_ - x0_) / std::sqrt(1.0 - z_ref_ * z_ref_);
  phase_ = 0.0;
  phase_ = -std::arg(raw(u0_));
}

cplx LimitFunction::formula(cplx z) const {
  const cplx w = raw::w_of_z(z);
  switch (form_) {
    case LimitForm::Lambda: {
      const cplx l2 = cplx(0.0, -1.0) * w;
      const cplx l02 = lambda_ref_ * lambda_ref_;
      const double a = std::norm(lambda_ref_);
      const cplx q = (l2 + l02) / (l2 + a);
      return 0.5 * q * q;
    }
    case LimitForm::LambdaFactored: {
      const cplx l2 = cplx(0.0, -1.0) * w;
      const cplx l02 = lambda_ref_ * lambda_ref_;
      const double a = std::norm(lambda_ref_);
      auto h = [a](cplx t) { return t / ((t - a) * (t + a)); };
      return 0.5 * (1.0 + h(l2) / h(l02)) * (l2 - a) / (l2 + a) * (l2 + l02) / (l2 - std::conj(l02));
    }
    case LimitForm::ZChart: {
      const cplx s = (z - x0_) / std::sqrt(1.0 - z * z) / s_scale_;
      const cplx zb = std::conj(z_ref_);
      const cplx b_x0 = raw::b0(z, w, x0_, raw::w_of_z(x0_));
      const cplx b_ref = raw::b0(z, w, zb, raw::w_of_z(zb));
      return (1.0 + s) / (2.0 * s) * b_x0 / b_ref;
    }
    case LimitForm::WChart: {
      const cplx ia(0.0, std::abs(w_ref_));
      auto v = [ia](cplx t) { return t / ((t + ia) * (t - ia)); };
      return 0.5 * (1.0 + v(w) / v(w_ref_)) * (w - ia) / (w + ia) * (w + w_ref_) / (w + std::conj(w_ref_));
    }
  }
  return 0.0;
}

cplx LimitFunction::raw_inside(cplx z) const {
  // x0 and conj(z_u0) are removable singularities of every form except the
  // reduced one; near them use the mean value over a small circle.
  if (form_ != LimitForm::Lambda) {
    const cplx marks[2] = {cplx(x0_), std::conj(z_ref_)};
    bool near = false;
    for (const cplx& p : marks) near = near || std::abs(z - p) < 1e-5 * std::max(1.0, std::abs(p));
    cplx direct = near ? cplx(0.0) : formula(z);
    if (near || !std::isfinite(std::abs(direct))) {
      const double r = std::min(1e-3, 0.5 * distance_to_A0(z));
      constexpr int kRing = 64;
      cplx sum = 0.0;
      for (int k = 0; k < kRing; ++k) sum += formula(z + std::polar(r, 2.0 * kPi * (k + 0.5) / kRing));
      return sum / static_cast<double>(kRing);
    }
    return direct;
  }
  return formula(z);
}

cplx LimitFunction::raw(const ChartPoint& u) const {
  u.require(Chart::U);
  if (!reflected_) return raw_inside(z_of(u, geom_));
  return std::conj(raw_inside(z_of(reflect_u(u), geom_)));
}

cplx LimitFunction::operator()(const ChartPoint& u) const {
  return std::polar(1.0, phase_) * raw(u);
}

namespace asymptotics {

cplx limit_P_u0(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom) {
  return LimitFunction(geom, u0, LimitForm::Lambda)(u);
}

cplx limit_P_u0_factored(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom) {
  return LimitFunction(geom, u0, LimitForm::LambdaFactored)(u);
}

cplx limit_P_infty(const ChartPoint& u, const ArcGeometry& geom) {
  return LimitFunction(geom, ChartPoint::u(0.0), LimitForm::ZChart)(u);
}

cplx limit_general_u0_zchart(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom) {
  return LimitFunction(geom, u0, LimitForm::ZChart)(u);
}

cplx limit_general_u0_wchart(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom) {
  return LimitFunction(geom, u0, LimitForm::WChart)(u);
}

cplx kernel_k(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom) {
  const cplx l = conformal::lambda_from_u(u, geom).value();
  const cplx l0 = std::conj(conformal::lambda_from_u(u0, geom).value());
  const cplx d = l + l0;
  return 2.0 * l * l0 / (d * d);
}

EnvelopeLimit envelope_limit(const ChartPoint& u, std::size_t n, const ArcGeometry& geom) {
  EnvelopeLimit out;
  out.kernel = kernel_k(u, u, geom).real();
  out.green = u.is_infinite()
                  ? -std::log(geom.cap())
                  : conformal::green_omega_alpha(u, ChartPoint::infinity(Chart::U), geom);
  out.value = std::exp(static_cast<double>(n) * out.green) * out.kernel;
  return out;
}

double thiran_detaille_norm(std::size_t n, const ArcGeometry& geom) {
  return std::pow(geom.cap(), static_cast<double>(n + 1)) / std::tan(geom.alpha() / 4.0);
}

}  // namespace asymptotics

}  // namespace arcwidom
