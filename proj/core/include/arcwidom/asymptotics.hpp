#pragma once

// Closed-form large-n limits on Omega_alpha: the limit of
// b(u, inf)^n P_{n,u0}(u), the reproducing kernel whose diagonal is the
// limit envelope, and the norm asymptote of the Chebyshev polynomials.

#include <cstddef>

#include "arcwidom/complex_format.hpp"
#include "arcwidom/conformal.hpp"

namespace arcwidom {

// Equivalent presentations of the same limit function.
enum class LimitForm {
  Lambda,          ///< 1/2 ((l^2 + l0^2)/(l^2 + |l0|^2))^2 in the sector chart
  LambdaFactored,  ///< the product of the h-ratio and the two Moebius factors
  ZChart,          ///< (1 + s)/(2 s) b0(z, x0)/b0(z, conj z_u0) with the symmetry circle
  WChart,          ///< the half-plane form with v(w, w0) = w/((w + i|w0|)(w - i|w0|))
};

const char* limit_form_name(LimitForm form);

// lim b(u, inf)^n P_{n,u0}(u) as a function of u. The unimodular constant is
// chosen so that the value at u0 is real and positive; `phase()` exposes it.
// For |u0| > 1 (and u0 = infinity) the function is obtained from the one at
// u0* = 1/conj(u0) by F_{u0}(u) = conj(F_{u0*}(u*)).
class LimitFunction {
 public:
  /// Throws DomainError if u0 is on the unit circle.
  LimitFunction(const ArcGeometry& geom, const ChartPoint& u0, LimitForm form = LimitForm::Lambda);

  /// Normalised value. Throws DomainError for u on the closed arc.
  cplx operator()(const ChartPoint& u) const;
  cplx operator()(cplx u) const { return (*this)(ChartPoint::u(u)); }
  /// Value before the unimodular normalisation.
  cplx raw(const ChartPoint& u) const;
  /// phi with value = e^{i phi} raw.
  double phase() const { return phase_; }

  const ArcGeometry& geometry() const { return geom_; }
  const ChartPoint& u0() const { return u0_; }
  LimitForm form() const { return form_; }

 private:
  cplx raw_inside(cplx z) const;   // for the reference point inside the disc
  cplx formula(cplx z) const;

  ArcGeometry geom_;
  ChartPoint u0_;
  LimitForm form_;
  bool reflected_ = false;  // u0 outside the closed disc
  cplx z_ref_;              // z(u0) or z(u0*)
  double x0_ = 0.0;
  cplx w_ref_;
  cplx lambda_ref_;
  cplx s_scale_;
  double phase_ = 0.0;
};

namespace asymptotics {

/// lim b(u, inf)^n P_{n,u0}(u) in the sector chart.
cplx limit_P_u0(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom);
/// The same through the factored presentation (cross-check).
cplx limit_P_u0_factored(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom);
/// (1 + s)/(2 s) b0(z, 0)/b0(z, conj z0) at z = z(u), s(z0) = 1; the u0 = 0 limit.
cplx limit_P_infty(const ChartPoint& u, const ArcGeometry& geom);
/// Symmetry-circle presentation for general u0.
cplx limit_general_u0_zchart(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom);
/// Half-plane presentation for general u0.
cplx limit_general_u0_wchart(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom);

/// k(u, u0) = 2 l conj(l0)/(l + conj(l0))^2 with l = lambda(u), l0 = lambda(u0).
cplx kernel_k(const ChartPoint& u, const ChartPoint& u0, const ArcGeometry& geom);

struct EnvelopeLimit {
  double green = 0.0;   ///< g(u, inf); at u = infinity, -log cap (the leading-coefficient problem)
  double kernel = 0.0;  ///< k(u, u)
  double value = 0.0;   ///< exp(n green) kernel
};
/// Asymptote of L_n(u).
EnvelopeLimit envelope_limit(const ChartPoint& u, std::size_t n, const ArcGeometry& geom);

/// cot(alpha/4) cap^{n+1}.
double thiran_detaille_norm(std::size_t n, const ArcGeometry& geom);

}  // namespace asymptotics

}  // namespace arcwidom
