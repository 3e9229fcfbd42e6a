#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "arcwidom/complex_format.hpp"

namespace arcwidom::lp {

// Revised simplex for the standard-form program
//
//   minimise  sum_j y_j   subject to   sum_j y_j a_j = g,  y >= 0,
//
// whose columns a_j in R^{2(n+1)} are indexed by pairs (theta_j, phi_j):
//
//   a_j . p = Re(e^{i phi_j} P(e^{i theta_j})),   P = sum_k (p_{2k} + i p_{2k+1}) q_k,
//
// for a fixed polynomial basis q_0..q_n whose values at each angle are supplied
// by the caller (monomials, or a basis orthonormalised on the arc).
//
// This is the dual of  max g.p  s.t.  Re(e^{i phi} P(e^{i theta})) <= 1, so the
// simplex multipliers of an optimal basis are the coefficients of the optimal
// polynomial. Columns are never materialised for pricing: dot products with
// a row vector are computed by evaluating the associated polynomial once per
// distinct angle.
//
// The basis inverse is kept dense and updated in product form, with a fresh LU
// refactorisation every `refactor_interval` pivots.
class TrigColumnLP {
 public:
  enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

  struct Options {
    double feasibility_tol = 1e-11;  ///< relative to the largest basic value
    double optimality_tol = 1e-11;   ///< on reduced costs (costs are 1)
    double pivot_tol = 1e-9;
    std::size_t refactor_interval = 64;
    std::size_t max_iterations = 200000;
    std::size_t degenerate_switch = 40;  ///< degenerate pivots before Bland's rule
  };

  explicit TrigColumnLP(std::size_t degree);
  TrigColumnLP(std::size_t degree, Options options);

  std::size_t rows() const { return rows_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_columns() const { return columns_.size(); }
  std::size_t num_angles() const { return angles_.size(); }

  /// Registers an angle with the basis values q_0..q_n at e^{i theta}; returns its index.
  std::size_t add_angle(double theta, std::vector<cplx> basis_values);
  /// Same, with the monomial basis.
  std::size_t add_angle(double theta);
  /// Adds the column (theta[angle], phi). Existing bases remain valid.
  void add_column(std::size_t angle, double phi);
  /// Removes every nonbasic column with index >= first, and angles left unused
  /// beyond the first `keep_angles`.
  void prune_nonbasic(std::size_t first, std::size_t keep_angles);

  /// Sets the right-hand side. A previously optimal basis is kept for warm start.
  void set_rhs(const Eigen::VectorXd& g);

  /// Solves from the current basis if one exists (dual simplex when the new
  /// right-hand side made it infeasible, primal simplex for new columns),
  /// otherwise from an artificial basis.
  Status solve();

  double objective() const;
  /// Simplex multipliers B^{-T} 1, i.e. the primal polynomial coefficients.
  Eigen::VectorXd multipliers() const;
  /// Multipliers packed as complex coefficients.
  std::vector<cplx> multiplier_poly() const;

  std::size_t iterations() const { return total_iterations_; }
  bool has_basis() const { return has_basis_; }

  double column_theta(std::size_t j) const { return angles_[columns_[j].angle]; }
  /// Explicit column vector (for tests).
  Eigen::VectorXd column(std::size_t j) const;
  /// Basic column indices (artificials encoded as -1 - row).
  const std::vector<long>& basis() const { return basis_; }
  const Eigen::VectorXd& basic_values() const { return xb_; }

 private:
  struct Column {
    std::size_t angle;
    double phi;
    double cphi;
    double sphi;
    bool basic;
  };

  void cold_start();
  Status primal(bool phase_one);
  Status dual();
  void drive_out_artificials();
  void refactor();
  void pivot(std::size_t r, long entering, const Eigen::VectorXd& d);
  Eigen::VectorXd column_vector(long j) const;
  // Values v.a_j for all real columns, via per-angle evaluation of V.
  void dot_all(const Eigen::VectorXd& v, std::vector<double>& out) const;
  Eigen::VectorXd basic_costs(bool phase_one) const;
  double scale() const;
  bool dual_feasible() const;

  std::size_t degree_;
  std::size_t rows_;
  Options opt_;

  std::vector<double> angles_;
  std::vector<std::vector<cplx>> values_;  // q_k(e^{i theta}) per angle
  std::vector<Column> columns_;

  Eigen::VectorXd rhs_;
  Eigen::VectorXd art_sign_;
  std::vector<long> basis_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  bool has_basis_ = false;
  std::size_t since_refactor_ = 0;
  std::size_t total_iterations_ = 0;

  mutable std::vector<cplx> angle_scratch_;
};

const char* status_name(TrigColumnLP::Status s);

}  // namespace arcwidom::lp
