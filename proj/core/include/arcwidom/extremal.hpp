#pragma once

#include <cstddef>
#include <memory>

#include "arcwidom/conformal.hpp"
#include "arcwidom/polynomial.hpp"
#include "arcwidom/simplex.hpp"

namespace arcwidom {

// Maximise |P(u0)| over polynomials of degree <= n with |P| <= 1 on the arc.
// For u0 = infinity the objective is the coefficient of u^n.
struct ExtremalProblem {
  ArcGeometry geom{1.5707963267948966};
  std::size_t n = 0;
  ChartPoint u0 = ChartPoint::u(0.0);
  std::size_t grid_m = 0;  ///< arc angles; 0 selects 8(n+1)
  std::size_t grid_k = 64;  ///< phases per angle
  double tol = 1e-6;        ///< relative gap between the LP bound and the certified value
  std::size_t max_rounds = 8;

  std::size_t arc_grid_size() const { return grid_m ? grid_m : 8 * (n + 1); }
  /// Throws DomainError on a malformed problem.
  void validate() const;
};

struct ExtremalSolution {
  ComplexPoly poly;           ///< feasible polynomial, scaled so that its arc sup is one
  /// The same polynomial in the arc-orthonormal basis used by the solver.
  std::shared_ptr<const ArcBasis> basis;
  std::vector<cplx> basis_coeffs;
  double value = 0.0;         ///< certified |P(u0)| (leading coefficient for u0 = infinity)
  double norm_cert = 0.0;     ///< sup of |poly| on an independent 10x validation grid
  double phase = 0.0;         ///< rotation applied so that b(u0, inf)^n P(u0) > 0
  double upper_bound = 0.0;   ///< value of the discretised LP (an upper bound)
  bool converged = false;     ///< relative gap <= tol within max_rounds
  std::size_t rounds = 0;
  std::size_t lp_iterations = 0;
  std::size_t active_peaks = 0;  ///< local maxima of |poly| above 1 - 10 tol

  /// Evaluates the polynomial through the orthonormal basis (more accurate
  /// than Horner on the monomial coefficients when those are large).
  cplx operator()(cplx u) const;
};

// Reusable solver for a fixed (alpha, n, grid). Successive calls with nearby
// u0 warm-start from the previous optimal basis, which makes sweeps cheap.
class ExtremalSolver {
 public:
  ExtremalSolver(const ArcGeometry& geom, std::size_t n, std::size_t grid_m = 0,
                 std::size_t grid_k = 64, double tol = 1e-6, std::size_t max_rounds = 8);
  ~ExtremalSolver();
  ExtremalSolver(ExtremalSolver&&) noexcept;
  ExtremalSolver& operator=(ExtremalSolver&&) noexcept;

  ExtremalSolution solve(const ChartPoint& u0);

  const ArcGeometry& geometry() const { return geom_; }
  std::size_t degree() const { return n_; }

 private:
  // Newton refinement of the LP solution on its active set; updates the
  // arguments and returns true only if the certified gap shrank.
  bool polish(const Eigen::VectorXd& g, double gscale, const ChartPoint& u0, std::size_t scan,
              std::vector<cplx>& c, ArcSup& sup, double& lower, double& upper) const;
  std::size_t add_cuts(const std::vector<cplx>& c, const ArcSup& sup);

  ArcGeometry geom_;
  std::size_t n_;
  std::size_t grid_m_;
  double tol_;
  std::size_t max_rounds_;
  std::shared_ptr<const ArcBasis> basis_;
  std::unique_ptr<lp::TrigColumnLP> lp_;
  std::size_t base_columns_ = 0;
  std::size_t base_angles_ = 0;
};

ExtremalSolution solve_extremal(const ExtremalProblem& prob);

namespace extremal {

/// P*(u) = u^n conj(P(1/conj u)).
ComplexPoly star(const ComplexPoly& p, std::size_t n);

/// ||T_n|| on the arc, computed as 1/L_n(0).
double chebyshev_norm(std::size_t n, const ArcGeometry& geom, double tol = 1e-6);

/// L_n(u) = max |P(u)| over the unit ball; u must be off the closed arc.
double envelope_at(const ChartPoint& u, std::size_t n, const ArcGeometry& geom, double tol = 1e-6);

/// Number of separated groups of arc angles where |P| > level, on a uniform scan.
std::size_t count_level_clusters(const ComplexPoly& p, double alpha, double level,
                                 std::size_t scan_points = 4096);

}  // namespace extremal

}  // namespace arcwidom
