#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "arcwidom/complex_format.hpp"

namespace arcwidom {

// Polynomial with complex coefficients in the monomial basis, c[k] u^k.
class ComplexPoly {
 public:
  ComplexPoly() : coeffs_{cplx(0.0)} {}
  explicit ComplexPoly(std::vector<cplx> coeffs);

  static ComplexPoly constant(cplx c, std::size_t n = 0);

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::vector<cplx>& coeffs() { return coeffs_; }
  /// Storage degree (number of coefficients - 1); trailing zeros are kept.
  std::size_t degree() const { return coeffs_.size() - 1; }

  cplx operator()(cplx u) const;
  /// Value and derivative at u.
  void eval_with_derivative(cplx u, cplx& value, cplx& derivative) const;
  /// Leading coefficient of the degree-n slot (zero if n exceeds the storage degree).
  cplx coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx(0.0); }

  ComplexPoly operator*(cplx s) const;

  /// P*(u) = u^n conj(P(1/conj u)): reverse the first n+1 coefficients and conjugate.
  ComplexPoly star(std::size_t n) const;

  /// max |P(e^{i theta})| over the given angles.
  double sup_on_angles(const std::vector<double>& thetas) const;

 private:
  std::vector<cplx> coeffs_;
};

/// Chebyshev-Lobatto angles on [-alpha, alpha]: alpha * cos(pi j/(m-1)), j = 0..m-1,
/// returned in increasing order. Closed under theta -> -theta.
std::vector<double> chebyshev_arc_angles(double alpha, std::size_t m);

/// m equispaced angles on [-alpha, alpha] including both endpoints.
std::vector<double> uniform_arc_angles(double alpha, std::size_t m);

// Basis q_0..q_n of polynomials, deg q_k = k, orthonormal in the discrete
// mean-square sense on Chebyshev-clustered points of the arc. Built by Arnoldi
// iteration on multiplication by u; evaluation reuses the Hessenberg
// recurrence, which stays accurate where monomial coefficients would grow
// exponentially.
class ArcBasis {
 public:
  /// samples = 0 selects max(64, 8(n+1)).
  ArcBasis(double alpha, std::size_t n, std::size_t samples = 0);

  std::size_t degree() const { return n_; }
  /// q_0(u), ..., q_n(u).
  std::vector<cplx> values(cplx u) const;
  /// q_k(u), q_k'(u), q_k''(u) for k = 0..n.
  void values_with_derivatives(cplx u, std::vector<cplx>& q, std::vector<cplx>& dq,
                               std::vector<cplx>& d2q) const;
  /// sum_k c[k] q_k(u).
  cplx evaluate(const std::vector<cplx>& c, cplx u) const;
  /// Coefficient of u^k in q_k (real and positive).
  double leading(std::size_t k) const { return lead_[k]; }
  /// Monomial coefficients of sum_k c[k] q_k.
  ComplexPoly to_monomial(const std::vector<cplx>& c) const;

 private:
  std::size_t n_;
  // h_[k][j] = <u q_k, q_j> for j <= k, and h_[k][k+1] = subdiagonal entry.
  std::vector<std::vector<cplx>> h_;
  std::vector<double> inv_sub_;  // 1 / h_[k][k+1], which is real
  std::vector<double> lead_;

  void fill(cplx u, cplx* w) const;
};

/// Sup of |f| on the arc |arg u| <= alpha: Chebyshev-clustered scan followed by
/// golden-section refinement of every local maximum. Also returns the refined
/// local maxima.
struct ArcSup {
  double value = 0.0;
  double argmax = 0.0;
  std::vector<double> peak_angles;
  std::vector<double> peak_values;
};
ArcSup arc_sup(const std::function<cplx(cplx)>& f, double alpha, std::size_t scan_points);
ArcSup arc_sup(const ComplexPoly& p, double alpha, std::size_t scan_points);

}  // namespace arcwidom
