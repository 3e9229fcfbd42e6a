#pragma once

// Finite-n domain Omega_n = Omega_0 \ [-x, x] and its potential theory.
//
// The harmonic measure of the slit I = [-x, x] seen from a pole p is the
// measure nu on I whose Omega_0-potential matches g_{Omega_0}(., p) on I:
//
//   int_I g_{Omega_0}(s, t) dnu(t) = g_{Omega_0}(s, p),   s in I.
//
// It is represented as dnu(t) = phi(t/x) / sqrt(x^2 - t^2) dt with phi a
// Chebyshev series, found by collocation at Chebyshev points. The logarithmic
// part of the kernel is integrated exactly and the smooth remainder by
// Gauss-Chebyshev quadrature. Then
//
//   g_{Omega_n}(z, p) = g_{Omega_0}(z, p) - int g_{Omega_0}(z, t) dnu(t)
//
// and log b_{Omega_n}(z, p) = log b_{Omega_0}(z, p) - int log b_{Omega_0}(z, t) dnu(t).

#include <cstddef>
#include <optional>
#include <vector>

#include "arcwidom/complex_format.hpp"
#include "arcwidom/conformal.hpp"
#include "arcwidom/polynomial.hpp"

namespace arcwidom {

struct BalayageOptions {
  std::size_t degree = 32;     ///< Chebyshev coefficients of the density
  std::size_t quadrature = 0;  ///< Gauss-Chebyshev nodes for the smooth kernel; 0 selects 4 * degree

  /// 32 coefficients, or 64 when n > 24.
  static BalayageOptions for_degree(std::size_t n);
};

class SlitMeasure {
 public:
  SlitMeasure() = default;

  double half_width() const { return x_; }
  cplx pole() const { return pole_; }
  /// Total mass, the harmonic measure of the slit seen from the pole.
  double mass() const { return mass_; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  /// 2-norm condition number of the collocation matrix.
  double condition() const { return condition_; }

  /// Density with respect to dt at t in (-x, x).
  double density(double t) const;
  /// int g_{Omega_0}(z, t) dnu(t). Valid on all of Omega_0, including the slit.
  double potential(cplx z) const;
  /// int log b_{Omega_0}(z, t) dnu(t) on the principal branch, whose cut lies
  /// on (-1, -x); the value just below the cut is 2 pi i mass lower than above.
  cplx log_potential(cplx z) const;

 private:
  friend SlitMeasure balayage_onto_slit(cplx pole, double x, const BalayageOptions& options);

  double x_ = 0.0;
  cplx pole_ = 0.0;
  double mass_ = 0.0;
  double condition_ = 0.0;
  std::vector<double> coeffs_;
  // Quadrature nodes s_q on (-1, 1) with phi(s_q) and a(x s_q).
  std::vector<double> nodes_;
  std::vector<double> phi_;
  std::vector<double> heights_;
};

/// Throws DomainError unless 0 < x < 1 and the pole lies in Omega_0 off [-x, x].
SlitMeasure balayage_onto_slit(cplx pole, double x, const BalayageOptions& options = {});

struct Pole {
  cplx point;
  std::size_t multiplicity = 1;
};

/// Root of sum_l mult_l * mass_l(x) = 1. Returns nullopt in the regime where
/// the masses stay below one for every x < 1 (no slit; the extremal
/// polynomial is then a monomial in the chart).
std::optional<double> solve_xn(const std::vector<Pole>& poles, const BalayageOptions& options = {});
/// Default pole set: conj(z0) with multiplicity n + 1.
std::optional<double> solve_xn(std::size_t n, const ArcGeometry& geom);

class SlitSystem {
 public:
  /// Weight polynomial E_n with zeros `zeros` (n points in the open lower
  /// half-plane); the pole set is zeros plus conj(z0). An empty list selects
  /// E_n = (z - conj z0)^n.
  static SlitSystem create(std::size_t n, const ArcGeometry& geom, std::vector<cplx> zeros = {},
                           std::optional<BalayageOptions> options = std::nullopt);

  std::size_t degree() const { return n_; }
  const ArcGeometry& geometry() const { return geom_; }
  /// True when no slit exists for this (n, poles); x_n and the measures are then unset.
  bool trivial() const { return !x_.has_value(); }
  /// Throws DomainError in the trivial regime.
  double x_n() const;
  const std::vector<Pole>& poles() const { return poles_; }
  const std::vector<SlitMeasure>& measures() const { return measures_; }
  /// sum of multiplicity * mass.
  double mass_sum() const;
  /// True for E_n = (z - conj z0)^n.
  bool default_weight() const { return default_weight_; }
  const std::vector<cplx>& zeros() const { return zeros_; }

  /// E_n(z) and conj(E_n(conj z)).
  cplx weight(cplx z) const;
  cplx weight_reflected(cplx z) const;

  /// g_{Omega_n}(z, z1). z1 may be any point of Omega_n; poles reuse their
  /// stored measures. Returns +infinity at z = z1.
  double green(cplx z, cplx z1) const;
  /// b_{Omega_n}(z, z1) with the log-potential cut on (-1, -x_n).
  cplx complex_green(cplx z, cplx z1) const;
  /// log b_{Omega_n}(z, z1) continued along a polyline that starts on
  /// (x_n, 1). Throws DomainError if a segment meets A_0 or the slit.
  cplx log_complex_green_along(const std::vector<cplx>& path, cplx z1) const;

  /// s_n(z) = sqrt(((z0^2 - 1)/(z0^2 - x^2)) (z^2 - x^2)/(z^2 - 1)), s_n(z0) = 1.
  cplx s_n(cplx z) const;

  /// Product of b_{Omega_n}(z, p) over the pole multiset. Single valued.
  cplx blaschke_product(cplx z) const;
  /// Phase psi such that the extremal formula with I e^{i psi} is a polynomial.
  double formula_phase() const { return psi_; }
  /// Q_n(z)/E_n(z) from the closed formula (before the unimodular factor).
  cplx formula_ratio(cplx z) const;
  /// The same, with every log potential continued along `path`.
  cplx formula_ratio_along(const std::vector<cplx>& path) const;

 private:
  SlitSystem() : geom_(1.0) {}
  const SlitMeasure& measure_for(cplx z1, SlitMeasure& scratch) const;
  // Number of signed crossings of (-1, -x_n) along the path (+1 downwards).
  int cut_winding(const std::vector<cplx>& path) const;
  cplx formula_from(cplx z, cplx prod) const;

  std::size_t n_ = 0;
  ArcGeometry geom_;
  std::optional<double> x_;
  std::vector<cplx> zeros_;
  std::vector<Pole> poles_;
  std::vector<SlitMeasure> measures_;
  BalayageOptions options_;
  bool default_weight_ = true;
  double psi_ = 0.0;
  cplx s_scale_ = 1.0;
};

}  // namespace arcwidom
