#include "arcwidom/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Golden-section maximisation of f on [a, b].
template <class F>
double golden_max(F f, double a, double b, double tol, double& best) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  const double fa = f(a);
  const double fb = f(b);
  double x = fc >= fd ? c : d;
  best = std::max(fc, fd);
  if (fa > best) {
    best = fa;
    x = a;
  }
  if (fb > best) {
    best = fb;
    x = b;
  }
  return x;
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

ComplexPoly ComplexPoly::constant(cplx c, std::size_t n) {
  std::vector<cplx> v(n + 1, cplx(0.0));
  v[0] = c;
  return ComplexPoly(std::move(v));
}

cplx ComplexPoly::operator()(cplx u) const {
  cplx acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * u + coeffs_[k];
  return acc;
}

void ComplexPoly::eval_with_derivative(cplx u, cplx& value, cplx& derivative) const {
  cplx p = 0.0;
  cplx dp = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    dp = dp * u + p;
    p = p * u + coeffs_[k];
  }
  value = p;
  derivative = dp;
}

ComplexPoly ComplexPoly::operator*(cplx s) const {
  std::vector<cplx> v = coeffs_;
  for (auto& c : v) c *= s;
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::star(std::size_t n) const {
  for (std::size_t k = n + 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0.0) throw DomainError("star(n) applied to a polynomial of degree > n");
  }
  std::vector<cplx> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = std::conj(coefficient(n - k));
  return ComplexPoly(std::move(v));
}

double ComplexPoly::sup_on_angles(const std::vector<double>& thetas) const {
  double s = 0.0;
  for (double t : thetas) s = std::max(s, std::abs((*this)(std::polar(1.0, t))));
  return s;
}

std::vector<double> chebyshev_arc_angles(double alpha, std::size_t m) {
  if (m < 2) throw DomainError("arc grid needs at least two points");
  std::vector<double> t(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = -alpha * std::cos(kPi * static_cast<double>(j) / static_cast<double>(m - 1));
  }
  t.front() = -alpha;
  t.back() = alpha;
  // Exact symmetry so that the grid is closed under theta -> -theta.
  for (std::size_t j = 0; j < m / 2; ++j) t[m - 1 - j] = -t[j];
  if (m % 2 == 1) t[m / 2] = 0.0;
  return t;
}

std::vector<double> uniform_arc_angles(double alpha, std::size_t m) {
  if (m < 2) throw DomainError("arc grid needs at least two points");
  std::vector<double> t(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = -alpha + 2.0 * alpha * static_cast<double>(j) / static_cast<double>(m - 1);
  }
  for (std::size_t j = 0; j < m / 2; ++j) t[m - 1 - j] = -t[j];
  if (m % 2 == 1) t[m / 2] = 0.0;
  return t;
}

ArcBasis::ArcBasis(double alpha, std::size_t n, std::size_t samples) : n_(n) {
  const std::size_t m = samples ? samples : std::max<std::size_t>(64, 8 * (n + 1));
  if (m < n + 1) throw DomainError("ArcBasis needs at least n+1 sample points");
  const std::vector<double> th = chebyshev_arc_angles(alpha, m);
  std::vector<cplx> z(m);
  for (std::size_t j = 0; j < m; ++j) z[j] = std::polar(1.0, th[j]);

  const double dm = static_cast<double>(m);
  std::vector<std::vector<cplx>> q(n + 1, std::vector<cplx>(m));
  std::fill(q[0].begin(), q[0].end(), cplx(1.0));
  h_.assign(n, {});
  lead_.assign(n + 1, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<cplx> v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = z[j] * q[k][j];
    std::vector<cplx> hk(k + 2, cplx(0.0));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i <= k; ++i) {
        cplx dot = 0.0;
        for (std::size_t j = 0; j < m; ++j) dot += std::conj(q[i][j]) * v[j];
        dot /= dm;
        for (std::size_t j = 0; j < m; ++j) v[j] -= dot * q[i][j];
        hk[i] += dot;
      }
    }
    double nrm = 0.0;
    for (const cplx& x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm / dm);
    if (!(nrm > 0.0)) throw NumericalError("ArcBasis: Arnoldi breakdown");
    hk[k + 1] = nrm;
    for (std::size_t j = 0; j < m; ++j) q[k + 1][j] = v[j] / nrm;
    lead_[k + 1] = lead_[k] / nrm;
    inv_sub_.push_back(1.0 / nrm);
    h_[k] = std::move(hk);
  }
}

void ArcBasis::fill(cplx u, cplx* w) const {
  w[0] = 1.0;
  for (std::size_t k = 0; k < n_; ++k) {
    cplx v = u * w[k];
    const cplx* hk = h_[k].data();
    for (std::size_t i = 0; i <= k; ++i) v -= hk[i] * w[i];
    w[k + 1] = v * inv_sub_[k];
  }
}

std::vector<cplx> ArcBasis::values(cplx u) const {
  std::vector<cplx> w(n_ + 1);
  fill(u, w.data());
  return w;
}

void ArcBasis::values_with_derivatives(cplx u, std::vector<cplx>& q, std::vector<cplx>& dq,
                                       std::vector<cplx>& d2q) const {
  q.assign(n_ + 1, cplx(0.0));
  dq.assign(n_ + 1, cplx(0.0));
  d2q.assign(n_ + 1, cplx(0.0));
  q[0] = 1.0;
  for (std::size_t k = 0; k < n_; ++k) {
    cplx v = u * q[k];
    cplx dv = q[k] + u * dq[k];
    cplx d2v = 2.0 * dq[k] + u * d2q[k];
    for (std::size_t i = 0; i <= k; ++i) {
      v -= h_[k][i] * q[i];
      dv -= h_[k][i] * dq[i];
      d2v -= h_[k][i] * d2q[i];
    }
    q[k + 1] = v * inv_sub_[k];
    dq[k + 1] = dv * inv_sub_[k];
    d2q[k + 1] = d2v * inv_sub_[k];
  }
}

cplx ArcBasis::evaluate(const std::vector<cplx>& c, cplx u) const {
  constexpr std::size_t kStack = 72;
  cplx buf[kStack];
  std::vector<cplx> heap;
  cplx* w = buf;
  if (n_ + 1 > kStack) {
    heap.resize(n_ + 1);
    w = heap.data();
  }
  fill(u, w);
  cplx acc = 0.0;
  for (std::size_t k = 0; k < std::min(c.size(), n_ + 1); ++k) acc += c[k] * w[k];
  return acc;
}

ComplexPoly ArcBasis::to_monomial(const std::vector<cplx>& c) const {
  std::vector<std::vector<cplx>> q(n_ + 1, std::vector<cplx>(n_ + 1, cplx(0.0)));
  q[0][0] = 1.0;
  for (std::size_t k = 0; k < n_; ++k) {
    std::vector<cplx>& next = q[k + 1];
    for (std::size_t d = 0; d <= k; ++d) next[d + 1] = q[k][d];
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t d = 0; d <= i; ++d) next[d] -= h_[k][i] * q[i][d];
    }
    for (auto& x : next) x *= inv_sub_[k];
  }
  std::vector<cplx> out(n_ + 1, cplx(0.0));
  for (std::size_t k = 0; k < std::min(c.size(), q.size()); ++k) {
    for (std::size_t d = 0; d <= k; ++d) out[d] += c[k] * q[k][d];
  }
  return ComplexPoly(std::move(out));
}

ArcSup arc_sup(const ComplexPoly& p, double alpha, std::size_t scan_points) {
  return arc_sup([&p](cplx u) { return p(u); }, alpha, scan_points);
}

ArcSup arc_sup(const std::function<cplx(cplx)>& fun, double alpha, std::size_t scan_points) {
  const std::vector<double> grid = chebyshev_arc_angles(alpha, std::max<std::size_t>(scan_points, 3));
  auto objective = [&](double t) { return std::norm(fun(std::polar(1.0, t))); };
  std::vector<double> f(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) f[j] = objective(grid[j]);

  ArcSup out;
  const std::size_t m = grid.size();
  for (std::size_t j = 0; j < m; ++j) {
    const bool left_ok = j == 0 || f[j] >= f[j - 1];
    const bool right_ok = j + 1 == m || f[j] > f[j + 1];
    if (!left_ok || !right_ok) continue;
    const double a = j == 0 ? grid[0] : grid[j - 1];
    const double b = j + 1 == m ? grid[m - 1] : grid[j + 1];
    double best = f[j];
    double x = grid[j];
    double refined = 0.0;
    const double xr = golden_max(objective, a, b, 1e-13 * std::max(1.0, alpha), refined);
    if (refined > best) {
      best = refined;
      x = xr;
    }
    out.peak_angles.push_back(x);
    out.peak_values.push_back(std::sqrt(best));
  }
  for (std::size_t k = 0; k < out.peak_values.size(); ++k) {
    if (out.peak_values[k] > out.value) {
      out.value = out.peak_values[k];
      out.argmax = out.peak_angles[k];
    }
  }
  return out;
}

}  // namespace arcwidom
