// Harmonic measure of the slit, the mass root x_n, and the Green's functions
// of Omega_n built from them.

#include <cmath>
#include <random>

#include "doctest.h"

#include "arcwidom/errors.hpp"
#include "arcwidom/slit_potential.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace arcwidom;
using arcwidom::test::kHalfPi;

namespace {

const ArcGeometry kGeom(kHalfPi);
const cplx kPole = kGeom.z_inf();  // -i at alpha = pi/2

// Random points off the real axis, away from the default pole.
std::vector<cplx> random_slit_domain(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-2.5, 2.5);
  std::uniform_real_distribution<double> im(-2.5, 2.5);
  std::vector<cplx> out;
  while (out.size() < count) {
    const cplx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.05) continue;
    if (std::abs(z - kPole) < 0.05) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace

TEST_CASE("slit mass against the elliptic-integral oracle") {
  CHECK(balayage_onto_slit(kPole, 0.5).mass() == doctest::Approx(oracle::kMassHalf).epsilon(1e-11));
  CHECK(balayage_onto_slit(kPole, 0.05).mass() == doctest::Approx(oracle::kMassTwentieth).epsilon(1e-11));
}

TEST_CASE("slit mass behaviour in x") {
  double prev = 0.0;
  for (double x : {1e-12, 1e-8, 1e-4, 0.01, 0.1, 0.3, 0.6, 0.9, 0.999}) {
    const SlitMeasure m = balayage_onto_slit(kPole, x);
    CAPTURE(x);
    CHECK(m.mass() > prev);
    CHECK(m.mass() < 1.0);
    CHECK(m.condition() < 1e8);
    prev = m.mass();
  }
  CHECK(balayage_onto_slit(kPole, 1e-12).mass() < 0.05);

  CHECK_THROWS_AS(balayage_onto_slit(kPole, 0.0), DomainError);
  CHECK_THROWS_AS(balayage_onto_slit(kPole, 1.0), DomainError);
  CHECK_THROWS_AS(balayage_onto_slit(0.1, 0.5), DomainError);
  CHECK_THROWS_AS(balayage_onto_slit(2.0, 0.5), DomainError);
}

TEST_CASE("density") {
  const SlitMeasure m = balayage_onto_slit(kPole, 0.4);
  // Non-negative, and even because the pole is on the imaginary axis.
  for (int k = -19; k <= 19; ++k) {
    const double t = 0.4 * k / 20.0;
    CHECK(m.density(t) > 0.0);
    CHECK(m.density(t) == doctest::Approx(m.density(-t)).epsilon(1e-10));
  }
  const SlitMeasure skew = balayage_onto_slit(cplx(0.6, -0.5), 0.4);
  CHECK(skew.density(0.3) > skew.density(-0.3));

  // Doubling the collocation degree changes masses by at most 1e-9.
  for (double x : {0.05, 0.3, 0.7}) {
    const double a = balayage_onto_slit(kPole, x, {32, 0}).mass();
    const double b = balayage_onto_slit(kPole, x, {64, 0}).mass();
    CHECK(std::abs(a - b) <= 1e-9);
  }
}

TEST_CASE("x_n against the oracle") {
  CHECK(solve_xn(2, kGeom).value() == doctest::Approx(oracle::kX2).epsilon(1e-9));
  CHECK(solve_xn(4, kGeom).value() == doctest::Approx(oracle::kX4).epsilon(1e-9));
  CHECK(solve_xn(10, kGeom).value() == doctest::Approx(oracle::kX10).epsilon(1e-8));
}

TEST_CASE("x_n decreases to zero") {
  double prev = 1.0;
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto x = solve_xn(n, kGeom);
    REQUIRE(x.has_value());
    CHECK(*x < prev);
    prev = *x;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("trivial regime") {
  // At alpha = pi/2 a single degree sits below the slit threshold.
  const SlitSystem s1 = SlitSystem::create(1, kGeom);
  CHECK(s1.trivial());
  CHECK_THROWS_AS(s1.x_n(), DomainError);
  // Near the full circle the monomial stays optimal for longer.
  CHECK_FALSE(solve_xn(6, ArcGeometry(3.10)).has_value());
}

TEST_CASE("mass condition after solve_xn") {
  for (std::size_t n : {2u, 5u, 12u, 24u, 32u}) {
    const SlitSystem s = SlitSystem::create(n, kGeom);
    REQUIRE_FALSE(s.trivial());
    CAPTURE(n);
    CHECK(std::abs(s.mass_sum() - 1.0) <= 1e-10);
    REQUIRE(s.measures().size() == 1);
    CHECK(s.poles().front().multiplicity == n + 1);
  }
  // General weight: three distinct zeros in the lower half-plane.
  const SlitSystem g = SlitSystem::create(3, kGeom, {cplx(0.3, -0.4), cplx(-0.5, -1.2), cplx(0.0, -2.0)});
  REQUIRE_FALSE(g.trivial());
  CHECK(std::abs(g.mass_sum() - 1.0) <= 1e-10);
  CHECK_FALSE(g.default_weight());
  CHECK_THROWS_AS(SlitSystem::create(2, kGeom, {cplx(0.3, 0.4), cplx(0.0, -1.0)}), DomainError);
  CHECK_THROWS_AS(SlitSystem::create(2, kGeom, {cplx(0.0, -1.0)}), DomainError);
}

TEST_CASE("Green's function of Omega_n") {
  const SlitSystem s = SlitSystem::create(6, kGeom);
  const double x = s.x_n();
  const auto pts = random_slit_domain(120, 7);

  SUBCASE("vanishes on the slit") {
    for (int k = -10; k <= 10; ++k) {
      const double t = x * k / 10.5;
      CHECK(std::abs(s.green(t, kPole)) < 1e-8);
      CHECK(std::abs(s.green(t, cplx(0.4, 0.7))) < 1e-8);
    }
  }

  SUBCASE("symmetry and domain monotonicity") {
    double asym = 0.0;
    double modulus = 0.0;
    for (std::size_t j = 0; j + 1 < pts.size(); j += 2) {
      const double gab = s.green(pts[j], pts[j + 1]);
      const double gba = s.green(pts[j + 1], pts[j]);
      asym = std::max(asym, std::abs(gab - gba));
      const double g0 = conformal::green_omega0(ChartPoint::z(pts[j]), ChartPoint::z(pts[j + 1]));
      CHECK(gab < g0);
      CHECK(gab > 0.0);
      modulus = std::max(modulus, std::abs(std::abs(s.complex_green(pts[j], pts[j + 1])) - std::exp(-gab)));
    }
    CHECK(asym < 1e-7);
    CHECK(modulus < 1e-10);
    // Pole argument uses the stored measure, and agrees with the exchanged roles.
    for (std::size_t j = 0; j < 20; ++j) {
      CHECK(std::abs(s.green(pts[j], kPole) - s.green(kPole, pts[j])) < 1e-7);
      // A smaller Green's function means a larger modulus e^{-g}.
      CHECK(std::abs(s.complex_green(pts[j], kPole)) >
            std::abs(conformal::b_omega0(ChartPoint::z(pts[j]), ChartPoint::z(kPole))));
    }
  }

  CHECK(s.green(kPole, kPole) == std::numeric_limits<double>::infinity());
}

TEST_CASE("weak-star concentration at the origin") {
  // (n + 1) nu_n has unit mass and shrinks onto 0.
  const cplx z(0.3, 0.45);
  const double target = conformal::green_omega0(ChartPoint::z(z), ChartPoint::z(0.0));
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t n = 4; n <= 32; n += 4) {
    const SlitSystem s = SlitSystem::create(n, kGeom);
    const double err = std::abs(static_cast<double>(n + 1) * s.measures().front().potential(z) - target);
    CAPTURE(n);
    // Monotone until roundoff takes over.
    CHECK((err < prev || err < 1e-13));
    prev = err;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("s_n") {
  const SlitSystem s = SlitSystem::create(5, kGeom);
  const double x = s.x_n();
  const cplx z0 = kGeom.z0();
  CHECK(std::abs(s.s_n(z0) - 1.0) < 1e-14);
  auto rational = [&](cplx z) { return (z0 * z0 - 1.0) / (z0 * z0 - x * x) * (z * z - x * x) / (z * z - 1.0); };
  for (cplx z : random_slit_domain(200, 19)) {
    const cplx v = s.s_n(z);
    CHECK(std::abs(v * v - rational(z)) < 1e-12 * std::max(1.0, std::abs(rational(z))));
    // The rational expression has real coefficients in z^2.
    CHECK(std::abs(rational(std::conj(z)) - std::conj(rational(z))) < 1e-12 * std::max(1.0, std::abs(rational(z))));
  }
  CHECK_THROWS_AS(s.s_n(x), SingularPointError);
  CHECK_THROWS_AS(s.s_n(-1.0), SingularPointError);
}

TEST_CASE("single-valued formula along two paths") {
  const SlitSystem s = SlitSystem::create(4, kGeom);
  const double x = s.x_n();
  const double b = 0.5 * (x + 1.0);
  for (cplx z : {cplx(0.2, 0.6), cplx(-0.7, 0.3), cplx(0.1, -0.5), cplx(1.8, -0.2)}) {
    const std::vector<cplx> direct{b, cplx(b, z.imag() > 0 ? 0.8 : -0.8), z};
    // Around the slit: down, across (-1, -x_n), back up, then to z.
    const std::vector<cplx> around{b, cplx(b, -0.6), cplx(-b, -0.6), cplx(-b, 0.6), cplx(b, 0.9),
                                   cplx(b, z.imag() > 0 ? 0.8 : -0.8), z};
    const cplx a1 = s.formula_ratio_along(direct);
    const cplx a2 = s.formula_ratio_along(around);
    CAPTURE(z);
    CHECK(std::abs(a1 - a2) < 1e-8 * std::max(1.0, std::abs(a1)));
    CHECK(std::abs(a1 - s.formula_ratio(z)) < 1e-8 * std::max(1.0, std::abs(a1)));
  }
  // Single log complex Green's functions are not single valued: one loop
  // shifts the phase by 2 pi times the mass.
  const std::vector<cplx> loop{b, cplx(b, -0.6), cplx(-b, -0.6), cplx(-b, 0.6), cplx(b, 0.6), cplx(b, 0.3)};
  const std::vector<cplx> straight{b, cplx(b, 0.3)};
  const cplx l1 = s.log_complex_green_along(loop, kPole);
  const cplx l2 = s.log_complex_green_along(straight, kPole);
  CHECK(std::abs(l1.real() - l2.real()) < 1e-10);
  const double shift = std::abs(l1.imag() - l2.imag());
  const double mass = s.measures().front().mass();
  CHECK(std::abs(std::remainder(shift, 2.0 * test::kPi) - 2.0 * test::kPi * mass) < 1e-8);

  CHECK_THROWS_AS(s.formula_ratio_along({cplx(0.0, 0.5), cplx(0.2, 0.6)}), DomainError);
  CHECK_THROWS_AS(s.formula_ratio_along({b, cplx(0.0, 0.0)}), DomainError);
  CHECK_THROWS_AS(s.formula_ratio_along({b, cplx(2.0, 0.0)}), DomainError);
}
