#pragma once

#include <cstddef>
#include <optional>

#include "arcwidom/polynomial.hpp"
#include "arcwidom/slit_potential.hpp"

namespace arcwidom {

// Explicit extremal polynomial for the weighted problem on A_0: the closed
// formula built from the slit system, sampled on a circle |z| = R and fitted
// by a degree-n polynomial. The fit residual on held-out samples certifies
// that the formula is a polynomial.
struct QnResult {
  ComplexPoly coeffs;                 ///< Q_n in the z chart, phase included
  std::optional<ComplexPoly> pullback;  ///< P(u) = Q_n(z(u))/E_n(z(u)); default weight only
  double phase = 0.0;      ///< unimodular factor e^{i phase} applied to the formula
  double attained = 0.0;   ///< |Q_n(z0)|
  double product = 0.0;    ///< |E_n(z0)| exp(sum_l g_{Omega_n}(conj z_l, z0))
  double chart_value = 0.0;  ///< product / |E_n(z0)|, the extremal value at u = 0
  double sup_check = 0.0;    ///< sup of |Q_n/E_n| on A_0 (scan plus refined maxima)
  double formula_sup = 0.0;  ///< the same sup for the closed formula, without the fit
  double active_deviation = 0.0;  ///< max ||Q_n/E_n| - 1| over local maxima above 1 - 1e-3
  double active_peak = 0.0;       ///< the local maximum attaining active_deviation
  std::size_t active_points = 0;
  double fit_residual = 0.0;  ///< relative misfit on held-out samples
  double fit_radius = 0.0;

  /// Q_n(z)/E_n(z) for z in Omega_0 or on A_0 (including z = infinity via `at_infinity`).
  cplx ratio(cplx z, const SlitSystem& sys) const;
  /// Limit of Q_n/E_n at z = infinity (E_n is monic).
  cplx at_infinity() const { return coeffs.coefficient(coeffs.degree()); }
};

struct QnOptions {
  double fit_radius = 0.0;        ///< 0 selects 1.5 max(1, max |pole|)
  std::size_t a0_scan = 512;      ///< points of the A_0 sup scan (through the arc chart)
  double max_fit_residual = 1e-7;
};

/// Throws DomainError in the trivial regime and NumericalError if the fit
/// residual exceeds `max_fit_residual`.
QnResult build_Qn(const SlitSystem& sys, const QnOptions& options = {});

}  // namespace arcwidom
