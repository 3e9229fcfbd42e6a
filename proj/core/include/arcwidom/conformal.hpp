#pragma once

// Closed-form charts between the arc complement, the slit plane, the upper
// half-plane and the quarter-plane sector, together with the Green's and
// complex Green's functions they carry.
//
//   U      : Omega_alpha = extended plane minus the arc A_alpha = {|u|=1, |arg u| <= alpha}
//   Z      : Omega_0 = (C \ R) u (-1, 1), boundary A_0 = R \ (-1, 1)
//   W      : upper half-plane, w(z) = sqrt((z-1)/(z+1)), w(0) = i
//   LAMBDA : sector Pi = {|arg lambda| <= pi/4}, lambda^2 = -i w
//
// u(z) = (z - z0)/(z - conj z0) with z0 = i tan(alpha/2); it sends z0 to 0,
// conj z0 to infinity, -1 to e^{i alpha} and +1 to e^{-i alpha}.

#include <complex>

#include "arcwidom/complex_format.hpp"

namespace arcwidom {

enum class Chart { U, Z, W, Lambda };

const char* chart_name(Chart chart);

// A complex value tagged with the chart it lives in. The point at infinity
// exists only in the U and Z charts.
class ChartPoint {
 public:
  static ChartPoint u(cplx value) { return {Chart::U, value, false}; }
  static ChartPoint z(cplx value) { return {Chart::Z, value, false}; }
  /// Throws DomainError unless Im(value) >= 0.
  static ChartPoint w(cplx value);
  /// Throws DomainError unless |arg value| <= pi/4.
  static ChartPoint lambda(cplx value);
  /// Throws DomainError for the W and Lambda charts.
  static ChartPoint infinity(Chart chart);

  Chart chart() const { return chart_; }
  bool is_infinite() const { return infinite_; }
  /// Finite value; throws DomainError at infinity.
  cplx value() const;

  /// Throws DomainError if the point is not in `expected`.
  const ChartPoint& require(Chart expected) const;

 private:
  ChartPoint(Chart chart, cplx value, bool infinite)
      : chart_(chart), value_(value), infinite_(infinite) {}

  Chart chart_;
  cplx value_;
  bool infinite_;
};

// Half-angle alpha of the arc and the chart constants derived from it.
class ArcGeometry {
 public:
  /// Throws DomainError unless 0 < alpha < pi.
  explicit ArcGeometry(double alpha);

  double alpha() const { return alpha_; }
  /// i tan(alpha/2), the z-image of u = 0.
  cplx z0() const { return z0_; }
  /// conj(z0), the z-image of u = infinity.
  cplx z_inf() const { return std::conj(z0_); }
  /// w(z0) = exp(i(pi - alpha)/2).
  cplx w0() const { return w0_; }
  /// w(conj z0) = -conj(w0).
  cplx w_inf() const { return -std::conj(w0_); }
  /// e^{i alpha}, the endpoint of the arc in the upper half-plane.
  cplx arc_endpoint() const { return std::polar(1.0, alpha_); }
  /// Logarithmic capacity of A_alpha, lim |u b(u, infinity)|.
  double cap() const { return cap_; }
  /// Unimodular factor fixing lim u b(u, infinity) > 0.
  cplx infinity_phase() const { return infinity_phase_; }

  /// True when u lies on the closed arc A_alpha.
  bool on_arc(cplx u) const;
  /// Euclidean distance from u to the closed arc.
  double distance_to_arc(cplx u) const;

 private:
  double alpha_;
  cplx z0_;
  cplx w0_;
  double cap_;
  cplx infinity_phase_;
};

// Circle K0 through z and conj(z) that is orthogonal to the real axis and to
// the unit circle, so that reflection in it swaps -1 and +1 and preserves
// Omega_0. When Re z = 0 it degenerates to the imaginary axis.
struct SymmetryCircle {
  double center = 0.0;
  double radius = 0.0;
  double x0 = 0.0;  ///< intersection with (-1, 1)
  bool degenerate = false;

  /// Anti-conformal reflection in the circle (or in the imaginary axis).
  cplx reflect(cplx z) const;
};

namespace conformal {

ChartPoint u_from_z(const ChartPoint& z, const ArcGeometry& geom);
ChartPoint z_from_u(const ChartPoint& u, const ArcGeometry& geom);

/// w(z) = sqrt((z - 1)/(z + 1)) with w(0) = i. The branch cut is A_0 itself,
/// approached from above. Throws SingularPointError for z on A_0.
ChartPoint w_from_z(const ChartPoint& z);

/// lambda(u) = ((u e^{i alpha} - 1)/(u - e^{i alpha}))^{1/4}, root taken in Pi.
/// Throws SingularPointError for u on the closed arc.
ChartPoint lambda_from_u(const ChartPoint& u, const ArcGeometry& geom);

/// (w - w1)/(w - conj w1). Throws SingularPointError when w = conj(w1).
cplx blaschke_halfplane(cplx w, cplx w1);
/// -log|blaschke_halfplane(w, w1)|; +infinity at w = w1.
double green_halfplane(cplx w, cplx w1);

/// Green's function of Omega_0, transported from the half-plane.
double green_omega0(const ChartPoint& z, const ChartPoint& z1);
/// Complex Green's function of Omega_0: blaschke_halfplane(w(z), w(z1)).
cplx b_omega0(const ChartPoint& z, const ChartPoint& z1);

/// Green's function of Omega_alpha; either argument may be infinity.
double green_omega_alpha(const ChartPoint& u, const ChartPoint& u1, const ArcGeometry& geom);
/// Complex Green's function of Omega_alpha. For u1 = infinity the phase is
/// fixed so that lim u b(u, infinity) = cap > 0; otherwise the phase is the
/// one inherited from blaschke_halfplane.
cplx b_omega_alpha(const ChartPoint& u, const ChartPoint& u1, const ArcGeometry& geom);

/// Throws DomainError if z_u0 is on A_0.
SymmetryCircle symmetry_circle(cplx z_u0);

/// Capacity computed as the limit |u b(u, infinity)| at a single finite u;
/// used to check the closed form.
double capacity_probe(cplx u, const ArcGeometry& geom);

}  // namespace conformal

// Raw complex-valued versions for use inside the numerical modules. They skip
// chart bookkeeping but keep the same branch conventions.
namespace conformal::raw {

/// True if z lies on A_0 = R \ (-1, 1).
bool on_A0(cplx z);
cplx w_of_z(cplx z);
cplx z_of_w(cplx w);
/// w(z) - w(t) computed without cancellation.
cplx w_difference(cplx z, cplx wz, cplx t, cplx wt);
/// b_{Omega_0}(z, t) given w(z), w(t).
cplx b0(cplx z, cplx wz, cplx t, cplx wt);
/// g_{Omega_0}(x, t) for x, t both real in (-1, 1).
double green0_real(double x, double t);
/// a(t) = sqrt((1 - t)/(1 + t)), so that w(t) = i a(t) on (-1, 1).
double slit_height(double t);

}  // namespace conformal::raw

}  // namespace arcwidom
