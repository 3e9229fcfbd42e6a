#include "arcwidom/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arcwidom/errors.hpp"

namespace arcwidom::lp {

const char* status_name(TrigColumnLP::Status s) {
  switch (s) {
    case TrigColumnLP::Status::Optimal:
      return "optimal";
    case TrigColumnLP::Status::Infeasible:
      return "infeasible";
    case TrigColumnLP::Status::Unbounded:
      return "unbounded";
    case TrigColumnLP::Status::IterationLimit:
      return "iteration-limit";
  }
  return "?";
}

TrigColumnLP::TrigColumnLP(std::size_t degree) : TrigColumnLP(degree, Options{}) {}

TrigColumnLP::TrigColumnLP(std::size_t degree, Options options)
    : degree_(degree), rows_(2 * (degree + 1)), opt_(options) {
  rhs_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_));
}

std::size_t TrigColumnLP::add_angle(double theta, std::vector<cplx> basis_values) {
  if (basis_values.size() != degree_ + 1) throw DomainError("basis values have the wrong length");
  angles_.push_back(theta);
  values_.push_back(std::move(basis_values));
  return angles_.size() - 1;
}

std::size_t TrigColumnLP::add_angle(double theta) {
  std::vector<cplx> v(degree_ + 1);
  const cplx u = std::polar(1.0, theta);
  cplx pk = 1.0;
  for (auto& x : v) {
    x = pk;
    pk *= u;
  }
  return add_angle(theta, std::move(v));
}

void TrigColumnLP::add_column(std::size_t angle, double phi) {
  if (angle >= angles_.size()) throw DomainError("column refers to an unknown angle");
  columns_.push_back({angle, phi, std::cos(phi), std::sin(phi), false});
}

void TrigColumnLP::prune_nonbasic(std::size_t first, std::size_t keep_angles) {
  std::vector<long> remap(columns_.size(), -1);
  std::vector<Column> kept;
  kept.reserve(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (j < first || columns_[j].basic) {
      remap[j] = static_cast<long>(kept.size());
      kept.push_back(columns_[j]);
    }
  }
  columns_ = std::move(kept);
  for (long& b : basis_) {
    if (b >= 0) b = remap[static_cast<std::size_t>(b)];
  }

  std::vector<long> amap(angles_.size(), -1);
  std::vector<char> used(angles_.size(), 0);
  for (std::size_t a = 0; a < std::min(keep_angles, angles_.size()); ++a) used[a] = 1;
  for (const Column& c : columns_) used[c.angle] = 1;
  std::vector<double> na;
  std::vector<std::vector<cplx>> nv;
  for (std::size_t a = 0; a < angles_.size(); ++a) {
    if (!used[a]) continue;
    amap[a] = static_cast<long>(na.size());
    na.push_back(angles_[a]);
    nv.push_back(std::move(values_[a]));
  }
  angles_ = std::move(na);
  values_ = std::move(nv);
  for (Column& c : columns_) c.angle = static_cast<std::size_t>(amap[c.angle]);
}

void TrigColumnLP::set_rhs(const Eigen::VectorXd& g) {
  if (static_cast<std::size_t>(g.size()) != rows_) throw DomainError("rhs has the wrong length");
  rhs_ = g;
  if (has_basis_) xb_ = binv_ * rhs_;
}

Eigen::VectorXd TrigColumnLP::column(std::size_t j) const { return column_vector(static_cast<long>(j)); }

Eigen::VectorXd TrigColumnLP::column_vector(long j) const {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_));
  if (j < 0) {
    const auto r = static_cast<Eigen::Index>(-1 - j);
    a(r) = art_sign_(r);
    return a;
  }
  const Column& c = columns_[static_cast<std::size_t>(j)];
  const cplx rot(c.cphi, c.sphi);
  const std::vector<cplx>& q = values_[c.angle];
  for (std::size_t k = 0; k <= degree_; ++k) {
    const cplx v = rot * q[k];
    a(static_cast<Eigen::Index>(2 * k)) = v.real();
    a(static_cast<Eigen::Index>(2 * k + 1)) = -v.imag();
  }
  return a;
}

void TrigColumnLP::dot_all(const Eigen::VectorXd& v, std::vector<double>& out) const {
  angle_scratch_.resize(angles_.size());
  for (std::size_t a = 0; a < angles_.size(); ++a) {
    const std::vector<cplx>& q = values_[a];
    cplx acc = 0.0;
    for (std::size_t k = 0; k <= degree_; ++k) {
      acc += cplx(v(static_cast<Eigen::Index>(2 * k)), v(static_cast<Eigen::Index>(2 * k + 1))) * q[k];
    }
    angle_scratch_[a] = acc;
  }
  out.resize(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const Column& c = columns_[j];
    const cplx p = angle_scratch_[c.angle];
    out[j] = c.cphi * p.real() - c.sphi * p.imag();
  }
}

Eigen::VectorXd TrigColumnLP::basic_costs(bool phase_one) const {
  Eigen::VectorXd cb(static_cast<Eigen::Index>(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    const bool art = basis_[i] < 0;
    cb(static_cast<Eigen::Index>(i)) = phase_one ? (art ? 1.0 : 0.0) : (art ? 0.0 : 1.0);
  }
  return cb;
}

double TrigColumnLP::scale() const {
  return std::max(1.0, xb_.size() ? xb_.cwiseAbs().maxCoeff() : 1.0);
}

void TrigColumnLP::cold_start() {
  const auto m = static_cast<Eigen::Index>(rows_);
  art_sign_ = Eigen::VectorXd::Ones(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (rhs_(i) < 0) art_sign_(i) = -1.0;
  }
  for (Column& c : columns_) c.basic = false;
  basis_.assign(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) basis_[i] = -1 - static_cast<long>(i);
  binv_ = art_sign_.asDiagonal();
  xb_ = binv_ * rhs_;
  since_refactor_ = 0;
  has_basis_ = true;
}

void TrigColumnLP::refactor() {
  const auto m = static_cast<Eigen::Index>(rows_);
  Eigen::MatrixXd b(m, m);
  for (Eigen::Index i = 0; i < m; ++i) b.col(i) = column_vector(basis_[static_cast<std::size_t>(i)]);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
  binv_ = lu.inverse();
  xb_ = binv_ * rhs_;
  since_refactor_ = 0;
}

void TrigColumnLP::pivot(std::size_t r, long entering, const Eigen::VectorXd& d) {
  const auto ri = static_cast<Eigen::Index>(r);
  const double dr = d(ri);
  const double step = xb_(ri) / dr;
  binv_.row(ri) /= dr;
  const Eigen::RowVectorXd prow = binv_.row(ri);
  for (Eigen::Index i = 0; i < binv_.rows(); ++i) {
    if (i == ri || d(i) == 0.0) continue;
    binv_.row(i) -= d(i) * prow;
    xb_(i) -= d(i) * step;
  }
  xb_(ri) = step;

  const long leaving = basis_[r];
  if (leaving >= 0) columns_[static_cast<std::size_t>(leaving)].basic = false;
  basis_[r] = entering;
  if (entering >= 0) columns_[static_cast<std::size_t>(entering)].basic = true;

  ++total_iterations_;
  if (++since_refactor_ >= opt_.refactor_interval) refactor();
}

TrigColumnLP::Status TrigColumnLP::primal(bool phase_one) {
  std::vector<double> dots;
  std::vector<char> rejected(columns_.size(), 0);
  std::size_t degenerate_run = 0;
  for (std::size_t it = 0; it < opt_.max_iterations; ++it) {
    const Eigen::VectorXd pi = binv_.transpose() * basic_costs(phase_one);
    dot_all(pi, dots);
    const bool bland = degenerate_run >= opt_.degenerate_switch;

    long q = -1;
    double best = -opt_.optimality_tol;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (columns_[j].basic || rejected[j]) continue;
      const double dj = (phase_one ? 0.0 : 1.0) - dots[j];
      if (dj < best) {
        q = static_cast<long>(j);
        best = dj;
        if (bland) break;
      }
    }
    if (q < 0) return Status::Optimal;

    const Eigen::VectorXd d = binv_ * column_vector(q);
    const double ftol = opt_.feasibility_tol * scale();
    const double ptol = opt_.pivot_tol * std::max(1.0, d.cwiseAbs().maxCoeff());
    double theta_max = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      if (d(i) > ptol) theta_max = std::min(theta_max, (xb_(i) + ftol) / d(i));
    }
    if (!std::isfinite(theta_max)) {
      // A barely attractive column with no usable pivot is rounding noise.
      if (best > -1e3 * opt_.optimality_tol) {
        rejected[static_cast<std::size_t>(q)] = 1;
        continue;
      }
      return Status::Unbounded;
    }

    long r = -1;
    double rbest = 0.0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      if (d(i) <= ptol) continue;
      const double ratio = xb_(i) / d(i);
      if (ratio > theta_max) continue;
      if (bland) {
        // Smallest ratio, ties broken by smallest basis label.
        if (r < 0 || ratio < xb_(r) / d(r) ||
            (ratio == xb_(r) / d(r) && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(r)])) {
          r = i;
        }
      } else if (d(i) > rbest) {
        rbest = d(i);
        r = i;
      }
    }
    if (r < 0) return Status::Unbounded;

    if (xb_(r) < 0.0) xb_(r) = 0.0;
    const double step = xb_(r) / d(r);
    degenerate_run = step <= ftol ? degenerate_run + 1 : 0;
    pivot(static_cast<std::size_t>(r), q, d);
  }
  return Status::IterationLimit;
}

bool TrigColumnLP::dual_feasible() const {
  const Eigen::VectorXd pi = binv_.transpose() * basic_costs(false);
  std::vector<double> dots;
  dot_all(pi, dots);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!columns_[j].basic && 1.0 - dots[j] < -1e3 * opt_.optimality_tol) return false;
  }
  return true;
}

TrigColumnLP::Status TrigColumnLP::dual() {
  std::vector<double> dots;
  std::vector<double> alpha;
  for (std::size_t it = 0; it < opt_.max_iterations; ++it) {
    const double ftol = opt_.feasibility_tol * scale();
    Eigen::Index r = 0;
    const double xmin = xb_.minCoeff(&r);
    if (xmin >= -ftol) return Status::Optimal;

    const Eigen::VectorXd rho = binv_.row(r).transpose();
    dot_all(rho, alpha);
    const Eigen::VectorXd pi = binv_.transpose() * basic_costs(false);
    dot_all(pi, dots);

    double theta_max = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (columns_[j].basic || alpha[j] >= -opt_.pivot_tol) continue;
      const double dj = std::max(0.0, 1.0 - dots[j]);
      theta_max = std::min(theta_max, (dj + opt_.optimality_tol) / -alpha[j]);
    }
    if (!std::isfinite(theta_max)) return Status::Infeasible;

    long q = -1;
    double qbest = 0.0;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (columns_[j].basic || alpha[j] >= -opt_.pivot_tol) continue;
      const double dj = std::max(0.0, 1.0 - dots[j]);
      if (dj / -alpha[j] > theta_max) continue;
      if (-alpha[j] > qbest) {
        qbest = -alpha[j];
        q = static_cast<long>(j);
      }
    }
    if (q < 0) return Status::Infeasible;
    const Eigen::VectorXd d = binv_ * column_vector(q);
    if (std::abs(d(r)) < opt_.pivot_tol) {
      refactor();
      continue;
    }
    pivot(static_cast<std::size_t>(r), q, d);
  }
  return Status::IterationLimit;
}

void TrigColumnLP::drive_out_artificials() {
  std::vector<double> row;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (basis_[r] >= 0) continue;
    const Eigen::VectorXd rho = binv_.row(static_cast<Eigen::Index>(r)).transpose();
    dot_all(rho, row);
    long q = -1;
    double best = 1e-9;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (!columns_[j].basic && std::abs(row[j]) > best) {
        best = std::abs(row[j]);
        q = static_cast<long>(j);
      }
    }
    if (q < 0) throw NumericalError("constraint columns do not span the coefficient space");
    xb_(static_cast<Eigen::Index>(r)) = 0.0;
    pivot(r, q, binv_ * column_vector(q));
  }
  refactor();
}

TrigColumnLP::Status TrigColumnLP::solve() {
  if (columns_.empty()) return Status::Infeasible;
  if (has_basis_) {
    refactor();
    const double ftol = opt_.feasibility_tol * scale();
    if (xb_.minCoeff() < -ftol) {
      if (dual_feasible()) {
        const Status s = dual();
        if (s == Status::Optimal) {
          const Status p = primal(false);
          if (p == Status::Optimal) return p;
        }
      }
      has_basis_ = false;
    } else {
      const Status p = primal(false);
      if (p == Status::Optimal) return p;
      has_basis_ = false;
    }
  }

  cold_start();
  Status s = primal(true);
  if (s != Status::Optimal) {
    has_basis_ = false;
    return s;
  }
  double infeas = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] < 0) infeas += std::abs(xb_(static_cast<Eigen::Index>(i)));
  }
  if (infeas > 1e-8 * std::max(1.0, rhs_.cwiseAbs().sum())) {
    has_basis_ = false;
    return Status::Infeasible;
  }
  drive_out_artificials();
  s = primal(false);
  if (s != Status::Optimal) has_basis_ = false;
  return s;
}

double TrigColumnLP::objective() const {
  double v = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] >= 0) v += xb_(static_cast<Eigen::Index>(i));
  }
  return v;
}

Eigen::VectorXd TrigColumnLP::multipliers() const { return binv_.transpose() * basic_costs(false); }

std::vector<cplx> TrigColumnLP::multiplier_poly() const {
  const Eigen::VectorXd p = multipliers();
  std::vector<cplx> c(degree_ + 1);
  for (std::size_t k = 0; k <= degree_; ++k) {
    c[k] = cplx(p(static_cast<Eigen::Index>(2 * k)), p(static_cast<Eigen::Index>(2 * k + 1)));
  }
  return c;
}

}  // namespace arcwidom::lp
