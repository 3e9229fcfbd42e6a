// Chart maps, Green's functions and the symmetry circle.

#include <cmath>
#include <random>

#include "doctest.h"

#include "arcwidom/conformal.hpp"
#include "arcwidom/errors.hpp"
#include "test_support.hpp"

using namespace arcwidom;
using arcwidom::test::kHalfPi;
using arcwidom::test::kPi;

namespace {

cplx value_u(const ChartPoint& p) { return p.value(); }

double green_u(cplx a, cplx b, const ArcGeometry& g) {
  return conformal::green_omega_alpha(ChartPoint::u(a), ChartPoint::u(b), g);
}

}  // namespace

TEST_CASE("geometry constants") {
  const ArcGeometry g(kHalfPi);
  CHECK(g.z0().real() == 0.0);
  CHECK(g.z0().imag() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(g.w0()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.w0().imag() > 0.0);
  CHECK(std::abs(g.w0() - std::polar(1.0, kPi / 4.0)) < 1e-15);
  CHECK(g.cap() == doctest::Approx(0.70710678118654757).epsilon(1e-15));

  CHECK_THROWS_AS(ArcGeometry{0.0}, DomainError);
  CHECK_THROWS_AS(ArcGeometry{kPi}, DomainError);
  CHECK_THROWS_AS(ArcGeometry{-0.3}, DomainError);
  CHECK_THROWS_AS(ArcGeometry{std::nan("")}, DomainError);
}

TEST_CASE("capacity equals sin(alpha/2) and grows with alpha") {
  double prev = 0.0;
  for (int k = 1; k < 60; ++k) {
    const double a = kPi * k / 60.0;
    const ArcGeometry g(a);
    CHECK(std::abs(g.cap() - std::sin(a / 2.0)) < 1e-15);
    CHECK(g.cap() > prev);
    prev = g.cap();
  }
  CHECK(ArcGeometry(3.10).cap() > 0.999);
}

TEST_CASE("capacity as the limit of |u b(u, inf)|") {
  for (double a : {0.4, kHalfPi, 2.5}) {
    const ArcGeometry g(a);
    std::vector<double> probes;
    for (int k = 3; k <= 8; ++k) probes.push_back(conformal::capacity_probe(std::polar(std::pow(10.0, k), 0.7), g));
    // The probe error is c/|u| + O(|u|^-2): raw differences shrink tenfold per
    // decade, and one Richardson step removes the leading term.
    for (std::size_t j = 2; j < probes.size(); ++j) {
      CHECK(std::abs(probes[j] - probes[j - 1]) < 0.2 * std::abs(probes[j - 1] - probes[j - 2]) + 1e-15);
    }
    std::vector<double> rich;
    for (std::size_t j = 1; j < probes.size(); ++j) rich.push_back((10.0 * probes[j] - probes[j - 1]) / 9.0);
    CHECK(std::abs(rich.back() - rich[rich.size() - 2]) < 1e-9);
    CHECK(std::abs(rich.back() - g.cap()) < 1e-9);
    CHECK(std::abs(probes.back() - g.cap()) < 1e-8);
  }
}

TEST_CASE("u and z charts") {
  const double a = 1.1;
  const ArcGeometry g(a);

  SUBCASE("fixed points") {
    CHECK(std::abs(value_u(conformal::u_from_z(ChartPoint::z(g.z0()), g))) < 1e-15);
    CHECK(conformal::u_from_z(ChartPoint::z(g.z_inf()), g).is_infinite());
    CHECK(std::abs(value_u(conformal::u_from_z(ChartPoint::z(-1.0), g)) - std::polar(1.0, a)) < 1e-15);
    CHECK(std::abs(value_u(conformal::u_from_z(ChartPoint::z(1.0), g)) - std::polar(1.0, -a)) < 1e-15);
    CHECK(std::abs(conformal::z_from_u(ChartPoint::u(0.0), g).value() - g.z0()) < 1e-15);
    CHECK(std::abs(conformal::z_from_u(ChartPoint::infinity(Chart::U), g).value() - g.z_inf()) < 1e-15);
    CHECK(conformal::z_from_u(ChartPoint::u(1.0), g).is_infinite());
    CHECK(std::abs(conformal::z_from_u(ChartPoint::u(-1.0), g).value()) < 1e-15);
  }

  SUBCASE("real axis goes to the unit circle") {
    for (double x : {-7.0, -1.5, -0.3, 0.0, 0.8, 2.0, 40.0}) {
      CHECK(std::abs(std::abs(value_u(conformal::u_from_z(ChartPoint::z(x), g))) - 1.0) < 1e-14);
    }
  }

  SUBCASE("round trip") {
    double worst = 0.0;
    for (cplx u : test::random_domain_points(g, 2000, 11)) {
      const ChartPoint z = conformal::z_from_u(ChartPoint::u(u), g);
      worst = std::max(worst, std::abs(value_u(conformal::u_from_z(z, g)) - u) / std::max(1.0, std::abs(u)));
    }
    CHECK(worst < 1e-12);
  }

  SUBCASE("wrong chart is rejected") {
    CHECK_THROWS_AS(conformal::u_from_z(ChartPoint::u(0.1), g), DomainError);
    CHECK_THROWS_AS(conformal::z_from_u(ChartPoint::z(0.1), g), DomainError);
    CHECK_THROWS_AS(conformal::w_from_z(ChartPoint::u(0.1)), DomainError);
    CHECK_THROWS_AS(conformal::lambda_from_u(ChartPoint::z(0.1), g), DomainError);
  }
}

TEST_CASE("chart point invariants") {
  CHECK_THROWS_AS(ChartPoint::w(cplx(0.0, -0.1)), DomainError);
  CHECK_NOTHROW(ChartPoint::w(cplx(0.3, 0.0)));
  CHECK_THROWS_AS(ChartPoint::lambda(cplx(1.0, 1.1)), DomainError);
  CHECK_NOTHROW(ChartPoint::lambda(std::polar(2.0, kPi / 4.0)));
  CHECK_THROWS_AS(ChartPoint::infinity(Chart::W), DomainError);
  CHECK_THROWS_AS(ChartPoint::infinity(Chart::Lambda), DomainError);
  CHECK_THROWS_AS(ChartPoint::infinity(Chart::U).value(), DomainError);
}

TEST_CASE("w chart") {
  CHECK(std::abs(conformal::w_from_z(ChartPoint::z(0.0)).value() - cplx(0.0, 1.0)) < 1e-15);
  for (double a : {0.3, kHalfPi, 2.9}) {
    const ArcGeometry ga(a);
    CHECK(std::abs(conformal::w_from_z(ChartPoint::z(ga.z0())).value() - ga.w0()) < 1e-14);
    CHECK(std::abs(conformal::w_from_z(ChartPoint::z(ga.z_inf())).value() - ga.w_inf()) < 1e-14);
  }
  // w(iy) tends to 1 from inside the upper half-plane.
  double prev = 1.0;
  for (int k = 1; k <= 8; ++k) {
    const cplx w = conformal::w_from_z(ChartPoint::z(cplx(0.0, std::pow(10.0, k)))).value();
    CHECK(w.imag() > 0.0);
    CHECK(std::abs(w - 1.0) < prev);
    prev = std::abs(w - 1.0);
  }
  CHECK(prev < 1e-7);

  for (cplx z : test::random_z_points(500, 3)) CHECK(conformal::w_from_z(ChartPoint::z(z)).value().imag() > 0.0);
  CHECK_THROWS_AS(conformal::w_from_z(ChartPoint::z(1.5)), SingularPointError);
  CHECK_THROWS_AS(conformal::w_from_z(ChartPoint::z(-1.0)), SingularPointError);
  CHECK_NOTHROW(conformal::w_from_z(ChartPoint::z(0.99)));
}

TEST_CASE("lambda chart") {
  for (double a : {0.7, kHalfPi, 2.6}) {
    const ArcGeometry g(a);
    CHECK(std::abs(conformal::lambda_from_u(ChartPoint::u(0.0), g).value() - std::polar(1.0, -a / 4.0)) < 1e-14);
    CHECK(std::abs(conformal::lambda_from_u(ChartPoint::infinity(Chart::U), g).value() - std::polar(1.0, a / 4.0)) <
          1e-14);

    double sector_excess = 0.0;
    double square_gap = 0.0;
    for (cplx u : test::random_domain_points(g, 10000, 21)) {
      const cplx l = conformal::lambda_from_u(ChartPoint::u(u), g).value();
      sector_excess = std::max(sector_excess, std::abs(std::arg(l)) - kPi / 4.0);
      const cplx w = conformal::w_from_z(conformal::z_from_u(ChartPoint::u(u), g)).value();
      square_gap = std::max(square_gap, std::abs(l * l - cplx(0.0, -1.0) * w));
    }
    CHECK(sector_excess <= 1e-15);
    CHECK(square_gap < 1e-12);

    // Real exactly on the complementary arc.
    for (int k = 1; k <= 20; ++k) {
      const double th = a + (kPi - a) * k / 20.0;
      for (double s : {1.0, -1.0}) {
        const cplx l = conformal::lambda_from_u(ChartPoint::u(std::polar(1.0, s * th)), g).value();
        CHECK(std::abs(l.imag()) < 1e-10);
        CHECK(l.real() > 0.0);
      }
    }
    CHECK_THROWS_AS(conformal::lambda_from_u(ChartPoint::u(std::polar(1.0, a)), g), SingularPointError);
    CHECK_THROWS_AS(conformal::lambda_from_u(ChartPoint::u(std::polar(1.0, -a)), g), SingularPointError);
    CHECK_THROWS_AS(conformal::lambda_from_u(ChartPoint::u(1.0), g), SingularPointError);
  }
}

TEST_CASE("half-plane Blaschke factor") {
  const cplx w1(0.3, 0.8);
  CHECK(std::abs(conformal::blaschke_halfplane(w1, w1)) == 0.0);
  CHECK(conformal::green_halfplane(w1, w1) == std::numeric_limits<double>::infinity());
  for (double x : {-4.0, -0.2, 0.0, 1.0, 9.0}) {
    CHECK(std::abs(conformal::blaschke_halfplane(x, w1)) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(std::abs(conformal::blaschke_halfplane(cplx(-1.0, 2.0), w1)) < 1.0);
  CHECK_THROWS_AS(conformal::blaschke_halfplane(std::conj(w1), w1), SingularPointError);

  for (double a : {0.5, kHalfPi, 2.0}) {
    const ArcGeometry g(a);
    CHECK(std::abs(conformal::blaschke_halfplane(g.w0(), cplx(0.0, 1.0))) ==
          doctest::Approx(std::tan(a / 4.0)).epsilon(1e-14));
  }
  CHECK(std::abs(conformal::blaschke_halfplane(ArcGeometry(kHalfPi).w0(), cplx(0.0, 1.0))) ==
        doctest::Approx(0.41421356237309515).epsilon(1e-14));
}

TEST_CASE("Green's functions of Omega_0") {
  const ArcGeometry g(1.3);
  const ChartPoint z0 = ChartPoint::z(g.z0());
  CHECK(conformal::green_omega0(z0, ChartPoint::z(g.z_inf())) == doctest::Approx(-std::log(std::sin(0.65))));
  CHECK(std::abs(conformal::green_omega0(z0, ChartPoint::z(g.z_inf())) + std::log(g.cap())) < 1e-14);
  CHECK(std::abs(conformal::b_omega0(z0, ChartPoint::z(0.0))) == doctest::Approx(std::tan(1.3 / 4.0)).epsilon(1e-14));
  CHECK(conformal::green_omega0(z0, z0) == std::numeric_limits<double>::infinity());

  const auto pts = test::random_z_points(400, 5);
  double asym = 0.0;
  double modulus = 0.0;
  for (std::size_t j = 0; j + 1 < pts.size(); j += 2) {
    const ChartPoint a = ChartPoint::z(pts[j]);
    const ChartPoint b = ChartPoint::z(pts[j + 1]);
    const double gab = conformal::green_omega0(a, b);
    CHECK(gab > 0.0);
    asym = std::max(asym, std::abs(gab - conformal::green_omega0(b, a)));
    modulus = std::max(modulus, std::abs(std::abs(conformal::b_omega0(a, b)) - std::exp(-gab)));
  }
  CHECK(asym < 1e-12);
  CHECK(modulus < 1e-12);

  // Vanishes on A_0.
  for (double x : {-3.0, -1.0 - 1e-9, 1.0 + 1e-9, 2.5}) {
    CHECK(conformal::green_omega0(ChartPoint::z(cplx(x, 1e-12)), z0) < 1e-5);
  }
}

TEST_CASE("Green's functions of Omega_alpha") {
  const ArcGeometry g(kHalfPi);
  const ChartPoint inf = ChartPoint::infinity(Chart::U);
  CHECK(conformal::green_omega_alpha(ChartPoint::u(0.0), inf, g) == doctest::Approx(-std::log(std::sin(kPi / 4.0))));

  SUBCASE("conformal invariance and symmetry") {
    const auto pts = test::random_domain_points(g, 600, 9);
    double transport = 0.0;
    double asym = 0.0;
    double modulus = 0.0;
    for (std::size_t j = 0; j + 1 < pts.size(); j += 2) {
      const double gu = green_u(pts[j], pts[j + 1], g);
      const ChartPoint za = conformal::z_from_u(ChartPoint::u(pts[j]), g);
      const ChartPoint zb = conformal::z_from_u(ChartPoint::u(pts[j + 1]), g);
      transport = std::max(transport, std::abs(gu - conformal::green_omega0(za, zb)));
      const cplx wa = conformal::w_from_z(za).value();
      const cplx wb = conformal::w_from_z(zb).value();
      transport = std::max(transport, std::abs(gu - conformal::green_halfplane(wa, wb)));
      asym = std::max(asym, std::abs(gu - green_u(pts[j + 1], pts[j], g)));
      const cplx b = conformal::b_omega_alpha(ChartPoint::u(pts[j]), ChartPoint::u(pts[j + 1]), g);
      modulus = std::max(modulus, std::abs(std::abs(b) - std::exp(-gu)));
    }
    CHECK(transport < 1e-10);
    CHECK(asym < 1e-12);
    CHECK(modulus < 1e-12);
  }

  SUBCASE("normalisation at infinity") {
    const cplx far = std::polar(1e7, 0.4);
    const cplx ub = far * conformal::b_omega_alpha(ChartPoint::u(far), inf, g);
    CHECK(std::abs(ub.imag()) < 1e-6);
    CHECK(ub.real() == doctest::Approx(g.cap()).epsilon(1e-6));
  }

  SUBCASE("reflection symmetry") {
    for (cplx u : test::random_domain_points(g, 200, 17)) {
      const cplx b = conformal::b_omega_alpha(ChartPoint::u(u), inf, g);
      const cplx br = conformal::b_omega_alpha(ChartPoint::u(std::conj(u)), inf, g);
      CHECK(std::abs(br - std::conj(b)) < 1e-12);
    }
  }

  SUBCASE("vanishes on the arc") {
    for (double th : {-1.5, -0.7, 0.0, 0.9, 1.5}) {
      CHECK(green_u(std::polar(1.0 + 1e-10, th), 0.3, g) < 1e-4);
    }
  }
}

TEST_CASE("symmetry circle") {
  SUBCASE("degenerate") {
    const SymmetryCircle c = conformal::symmetry_circle(cplx(0.0, 2.0));
    CHECK(c.degenerate);
    CHECK(c.x0 == 0.0);
    CHECK(std::abs(c.reflect(cplx(0.4, 0.2)) - cplx(-0.4, 0.2)) < 1e-15);
  }

  SUBCASE("worked example") {
    const SymmetryCircle c = conformal::symmetry_circle(cplx(0.5, 0.5));
    CHECK_FALSE(c.degenerate);
    CHECK(c.center == doctest::Approx(1.5));
    CHECK(c.radius == doctest::Approx(std::sqrt(1.25)));
    CHECK(c.x0 == doctest::Approx(0.3819660112501051).epsilon(1e-14));
    CHECK(std::abs(c.reflect(-1.0) - 1.0) < 1e-14);
    CHECK(std::abs(c.reflect(1.0) + 1.0) < 1e-14);
    CHECK(std::abs(c.reflect(c.x0) - c.x0) < 1e-14);
  }

  SUBCASE("random points") {
    for (cplx z : test::random_z_points(300, 13)) {
      if (std::abs(z.real()) < 1e-3) continue;
      const SymmetryCircle c = conformal::symmetry_circle(z);
      CHECK(std::abs(c.radius * c.radius - (c.center * c.center - 1.0)) < 1e-10 * c.center * c.center);
      CHECK(std::abs(c.x0) < 1.0);
      CHECK(std::abs(std::abs(z - c.center) - c.radius) < 1e-10 * c.radius);
      CHECK(std::abs(c.reflect(-1.0) - 1.0) < 1e-9);
      const cplx w = conformal::raw::w_of_z(z);
      CHECK(std::abs(conformal::raw::w_of_z(c.x0) - cplx(0.0, std::abs(w))) < 1e-10);
      CHECK(std::abs(conformal::raw::w_of_z(std::conj(z)) + std::conj(w)) < 1e-12);
    }
  }

  CHECK_THROWS_AS(conformal::symmetry_circle(2.0), DomainError);
}

TEST_CASE("raw helpers") {
  CHECK(conformal::raw::on_A0(1.0));
  CHECK(conformal::raw::on_A0(-5.0));
  CHECK_FALSE(conformal::raw::on_A0(0.5));
  CHECK_FALSE(conformal::raw::on_A0(cplx(2.0, 1e-3)));
  for (double t : {-0.9, -0.2, 0.0, 0.6}) {
    CHECK(std::abs(conformal::raw::w_of_z(t) - cplx(0.0, conformal::raw::slit_height(t))) < 1e-15);
    CHECK(conformal::raw::green0_real(t, 0.7) ==
          doctest::Approx(conformal::green_omega0(ChartPoint::z(t), ChartPoint::z(0.7))).epsilon(1e-13));
  }
  for (cplx z : test::random_z_points(100, 8)) {
    const cplx w = conformal::raw::w_of_z(z);
    CHECK(std::abs(conformal::raw::z_of_w(w) - z) < 1e-12 * std::max(1.0, std::abs(z)));
  }
}
