#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "heun/dynamics/boundary.hpp"
#include "heun/dynamics/integrator.hpp"
#include "heun/dynamics/josephson.hpp"
#include "heun/dynamics/portrait.hpp"

using namespace heun::dynamics;

namespace {

// At A = 0 the flow is autonomous: the τ-time to go from φ0 to φ1 is
// ω ∫ dφ / (B - sin φ), computed here by quadrature.
double autonomous_travel_time(double B, double omega, double phi0, double phi1) {
  auto f = [&](double phi) { return omega / (B - std::sin(phi)); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, phi0, phi1, 15, 1e-14);
}

}  // namespace

TEST_CASE("integrator on a linear test problem") {
  // y'' = -y as a system; y(2π) = y(0).
  IntegratorOptions o;
  o.rtol = o.atol = 1e-12;
  auto f = [](double, const State<2>& y) { return State<2>{y[1], -y[0]}; };
  IntegratorStats st;
  const auto y = integrate_dp45<2>(f, 0.0, State<2>{1.0, 0.0}, kTwoPi, o, &st);
  CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(y[1]) < 1e-10);
  CHECK(st.accepted > 0);
  CHECK_THROWS_AS(integrate_dp45<2>(f, 1.0, State<2>{1.0, 0.0}, 0.0, o), std::invalid_argument);
}

TEST_CASE("lift at A = 0 against the travel-time quadrature") {
  for (double B : {1.5, 2.0, 3.0})
    for (double omega : {0.5, 1.0, 2.0})
      for (double phi0 : {0.0, 1.0, -2.0}) {
        const JosephsonParams p{B, 0.0, omega};
        const double phi1 = integrate_lift(p, phi0, kTwoPi, 1e-12);
        CHECK(autonomous_travel_time(B, omega, phi0, phi1) == doctest::Approx(kTwoPi).epsilon(1e-9));
      }
}

TEST_CASE("lift basics") {
  CHECK(integrate_lift({0.0, 0.0, 1.0}, 0.0, kTwoPi, 1e-10) == 0.0);
  CHECK_THROWS_AS(integrate_lift({1.0, 0.0, 0.0}, 0.0, kTwoPi, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(integrate_lift({1.0, 0.0, 1.0}, 0.0, kTwoPi, 0.0), std::invalid_argument);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ub(-3, 3), ua(-4, 4), uw(0.2, 3), up(-3, 3);
  for (int i = 0; i < 30; ++i) {
    const JosephsonParams p{ub(rng), ua(rng), uw(rng)};
    const double phi0 = up(rng);
    for (double tol : {1e-6, 1e-9}) {
      const double a = integrate_lift(p, phi0, kTwoPi, tol), b = integrate_lift(p, phi0, kTwoPi, tol / 10);
      CHECK(std::abs(a - b) < 10 * tol);
    }
  }
}

TEST_CASE("lift error shrinks with the tolerance") {
  const JosephsonParams p{2.0, 0.0, 1.0};
  auto err = [&](double tol) {
    return std::abs(autonomous_travel_time(2.0, 1.0, 0.5, integrate_lift(p, 0.5, kTwoPi, tol)) - kTwoPi);
  };
  const double e1 = err(1e-5), e2 = err(1e-7), e3 = err(1e-9);
  CHECK(e2 < e1);
  CHECK(e3 < e2);
  CHECK(e3 < 1e-8);
}

TEST_CASE("angles") {
  CHECK(wrap_angle(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK(wrap_angle(7.0) == doctest::Approx(7.0 - kTwoPi));
  CHECK(angle_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
  CHECK(angle_distance(1.0, 1.0 + 3 * kTwoPi) < 1e-12);
}

TEST_CASE("classification of normalized matrices") {
  CHECK(classify({{{1, 0}, {0, 1}}}).cls == MobiusClass::identity);
  CHECK(classify({{{-1, 0}, {0, -1}}}).cls == MobiusClass::identity);
  CHECK(classify({{{1, 1}, {0, 1}}}).cls == MobiusClass::parabolic);
  CHECK(classify({{{2, 0}, {0, 0.5}}}).cls == MobiusClass::hyperbolic);
  const auto e = classify({{{std::cos(0.3), -std::sin(0.3)}, {std::sin(0.3), std::cos(0.3)}}});
  CHECK(e.cls == MobiusClass::elliptic);
  CHECK(e.act(0.0) == doctest::Approx(0.6));
  // Scaling is removed.
  const auto s = classify({{{4, 0}, {0, 4}}});
  CHECK(s.cls == MobiusClass::identity);
  CHECK(s.m[0][0] * s.m[1][1] - s.m[0][1] * s.m[1][0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Mobius action agrees with the lift") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ub(-3, 3), ua(-4, 4), uw(0.3, 3);
  const double tol = 1e-10;
  for (int i = 0; i < 100; ++i) {
    const JosephsonParams p{ub(rng), ua(rng), uw(rng)};
    const auto rep = monodromy_consistency(p, tol);
    CHECK(rep.max_deviation < 10 * tol);
    const double det = rep.mono.m[0][0] * rep.mono.m[1][1] - rep.mono.m[0][1] * rep.mono.m[1][0];
    double big = 1.0;
    for (const auto& row : rep.mono.m)
      for (double v : row) big = std::max(big, std::abs(v));
    CHECK(std::abs(det - 1.0) < 1e-12 * big * big);
    // A -> -A is a half-period shift in τ; the class is preserved.
    const auto mirror = monodromy({p.B, -p.A, p.omega}, tol);
    CHECK(mirror.cls == rep.mono.cls);
    CHECK(mirror.trace == doctest::Approx(rep.mono.trace).epsilon(1e-7));
  }
  CHECK_NOTHROW(checked_poincare({1.2, 0.7, 1.0}, 1e-10));
}

TEST_CASE("rotation numbers") {
  for (double B : {1.5, 2.0, 3.0})
    for (double omega : {0.5, 1.0, 2.0}) {
      const auto r = rotation_number({B, 0.0, omega}, 1e-8);
      CHECK(std::abs(r.rho - std::sqrt(B * B - 1) / omega) < 1e-8);
    }
  const auto zero = rotation_number({0.0, 0.0, 1.0}, 1e-8);
  CHECK(zero.rho == 0.0);
  CHECK(zero.locked);
  for (int s = 1; s <= 3; ++s)
    for (double omega : {0.5, 1.0, 2.0}) {
      const double gp = growth_point(s, omega);
      CHECK(rotation_number({gp, 0.0, omega}, 1e-8).rho == doctest::Approx(s).epsilon(1e-9));
      CHECK(rotation_number({gp + 1e-3, 0.0, omega}, 1e-8).rho > s);
      CHECK(rotation_number({gp - 1e-3, 0.0, omega}, 1e-8).rho <= s);
    }
  // Averaging agrees with the accelerated value and its bound shrinks with K.
  const JosephsonParams p{1.7, 0.9, 1.3};
  const auto fast = rotation_number(p, 1e-8);
  const auto a1 = rotation_number_averaged(p, 1e-2), a2 = rotation_number_averaged(p, 1e-3);
  CHECK(a2.periods_used > a1.periods_used);
  CHECK(a2.error_estimate < a1.error_estimate);
  CHECK(std::abs(a2.rho - fast.rho) <= a2.error_estimate);
}

TEST_CASE("boundary points and growth points") {
  for (double omega : {0.5, 1.0, 2.0}) {
    CHECK(boundary_point(0, Branch::plus, 0.0, omega).B == doctest::Approx(1.0).epsilon(1e-9));
    for (int s = 1; s <= 3; ++s)
      for (Branch b : {Branch::plus, Branch::minus}) {
        const auto bp = boundary_point(s, b, 0.0, omega);
        CHECK(std::abs(bp.B - std::sqrt(s * s * omega * omega + 1)) < 1e-8);
      }
  }
  CHECK(growth_point(2, 2.0) == doctest::Approx(std::sqrt(17.0)));
  CHECK(growth_point(1, 0.0) == 1.0);
  CHECK_THROWS_AS(boundary_point(-1, Branch::plus, 0.0, 1.0), std::invalid_argument);

  for (int s = 0; s <= 3; ++s)
    for (Branch b : {Branch::plus, Branch::minus}) {
      const double A = 0.8, omega = 1.0;
      const auto bp = boundary_point(s, b, A, omega);
      const double phi0 = branch_sign(b) * kPi / 2;
      const JosephsonParams p{bp.B, A, omega};
      // Returns to φ0 + 2πs.
      CHECK(std::abs(integrate_lift(p, phi0, kTwoPi, 1e-12) - phi0 - kTwoPi * s) < 1e-7);
      // Half period: ±φ0 depending on the parity of s.
      const double half = integrate_lift(p, phi0, kPi, 1e-12);
      CHECK(angle_distance(half, s % 2 == 0 ? phi0 : -phi0) < 1e-6);
      // Fixed point of a boundary map is parabolic.
      const auto mono = monodromy(p, 1e-12);
      CHECK(std::abs(std::abs(mono.trace) - 2.0) < 1e-6);
      // g increases across the root.
      double prev = -1e300;
      for (int k = -4; k <= 4; ++k) {
        const double g = boundary_function(s, b, A, omega, bp.B + 0.05 * k, 1e-12);
        CHECK(g > prev);
        prev = g;
      }
    }
}

TEST_CASE("constrictions at omega = 2") {
  const auto cs = constriction_search(1, 2.0, -10.0, 10.0);
  REQUIRE(!cs.empty());
  bool positive = false;
  for (const auto& c : cs) {
    CHECK(c.B == 2.0);
    CHECK(c.identity_distance < 1e-8);
    CHECK(std::abs(std::abs(c.trace) - 2.0) < 1e-8);
    CHECK(c.rho == 1.0);
    if (c.A > 0 && c.A < 10) positive = true;
    bool mirrored = false;
    for (const auto& d : cs) mirrored = mirrored || std::abs(d.A + c.A) < 1e-8;
    CHECK(mirrored);
    const JosephsonParams p{c.B, c.A, 2.0};
    for (int k = 0; k < 8; ++k) CHECK(angle_distance(poincare_map(p, k * kTwoPi / 8, 1e-12), k * kTwoPi / 8) < 1e-8);
  }
  CHECK(positive);
}

TEST_CASE("portrait scan") {
  PortraitSpec spec;
  spec.omega = 1.0;
  spec.b_min = -2.0;
  spec.b_max = 2.0;
  spec.a_min = -2.0;
  spec.a_max = 2.0;
  spec.nx = 9;
  spec.ny = 9;
  spec.tol = 1e-6;
  spec.threads = 1;
  const auto one = portrait_scan(spec);
  spec.threads = 3;
  const auto three = portrait_scan(spec);
  CHECK(one.rho == three.rho);
  REQUIRE(one.rho.size() == 81);
  for (int iy = 0; iy < 9; ++iy)
    for (int ix = 0; ix < 9; ++ix) {
      CHECK(one.at(ix, iy) == doctest::Approx(one.at(ix, 8 - iy)).epsilon(1e-6).scale(1.0));
      CHECK(one.at(ix, iy) == doctest::Approx(-one.at(8 - ix, iy)).epsilon(1e-6).scale(1.0));
    }
  CHECK(one.B(0) == -2.0);
  CHECK(one.A(8) == 2.0);
  const std::string csv = portrait_csv(one);
  CHECK(csv.rfind("B,A,rho\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 82);
  spec.nx = 1;
  CHECK_THROWS_AS(portrait_scan(spec), std::invalid_argument);
}
