#include <cmath>

#include "doctest.h"
#include "heun/poly/resultant.hpp"
#include "heun/xi/xi_curve.hpp"
#include "oracles.hpp"

using namespace heun;
using namespace heun::xi;
using poly::BivarPoly;
using poly::Integer;

namespace {

BivarPoly mu() { return BivarPoly::variable(0, kMuR); }
BivarPoly r() { return BivarPoly::variable(1, kMuR); }
BivarPoly k(long c) { return BivarPoly::constant(c, kMuR); }

}  // namespace

TEST_CASE("G matrix layout") {
  const auto g2 = build_g_matrix(2);
  CHECK(g2[0][0].is_zero());
  CHECK(g2[0][1] == mu());
  CHECK(g2[1][0] == mu());
  CHECK(g2[1][1] == k(-1));
  const auto g4 = build_g_matrix(4);
  CHECK(g4[0][3] == mu());
  CHECK(g4[1][3] == k(-3));
  CHECK(g4[3][1] == k(-1));
  CHECK(g4[2][2] == k(-2));
}

TEST_CASE("xi polynomials, small cases") {
  CHECK(xi_polynomial(1, Sign::plus).poly == mu() + r());
  CHECK(xi_polynomial(1, Sign::minus).poly == mu() - r());
  CHECK(xi_polynomial(2, Sign::plus).poly == r() * r() - r() - mu() * mu());
  CHECK(xi_polynomial(2, Sign::minus).poly == r() * r() + r() - mu() * mu());
  for (int l = 1; l <= 6; ++l) {
    auto m = build_g_matrix(l);
    for (int i = 0; i < l; ++i) m[i][i] += r();
    const BivarPoly expected = oracle::cofactor_det(m, kMuR);
    const BivarPoly xp = xi_polynomial(l, Sign::plus).poly;
    CHECK(xp == expected);
    CHECK(xp.total_degree() == l);
  }
}

TEST_CASE("mu = 0 closed forms") {
  CHECK(mu_zero_closed_form(3, Sign::plus) == r() * (r() * r() - k(2)));
  CHECK(mu_zero_closed_form(4, Sign::plus) == r() * (r() - k(2)) * (r() * r() - k(3)));
  for (int l = 1; l <= 12; ++l) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      const auto rep = mu_zero_check(l, s);
      CHECK_MESSAGE(rep.matches_closed_form, "l = " << l);
      CHECK_MESSAGE(rep.distinct_roots, "l = " << l);
    }
  }
}

TEST_CASE("factorization identity and symmetries") {
  for (int l = 1; l <= 7; ++l) CHECK_MESSAGE(factorization_check(l), "l = " << l);
  for (int l = 1; l <= 7; ++l) {
    const BivarPoly p = xi_polynomial(l, Sign::plus).poly;
    const BivarPoly m = xi_polynomial(l, Sign::minus).poly;
    CHECK(poly::substitute(p, "r", -r()) == m);
    const BivarPoly p_neg_mu = poly::substitute(p, "μ", -mu());
    if (l % 2 == 0) CHECK(p_neg_mu == p);
    else CHECK(p_neg_mu == -m);
  }
}

TEST_CASE("multiplicities at infinity") {
  CHECK(multiplicity_at_infinity(2, Sign::plus, InfinityPoint::p_plus) == 1);
  CHECK(multiplicity_at_infinity(2, Sign::plus, InfinityPoint::p_minus) == 1);
  CHECK(multiplicity_at_infinity(5, Sign::plus, InfinityPoint::p_plus) == 2);
  CHECK(multiplicity_at_infinity(5, Sign::plus, InfinityPoint::p_minus) == 3);
  CHECK(multiplicity_at_infinity(5, Sign::minus, InfinityPoint::p_minus) == 2);
  CHECK(multiplicity_at_infinity(5, Sign::minus, InfinityPoint::p_plus) == 3);
  CHECK_THROWS_AS(multiplicity_at_infinity(1, Sign::plus, InfinityPoint::p_plus), std::invalid_argument);
}

TEST_CASE("genus bound") {
  CHECK(genus_bound(2).conjectured_genus == 0);
  CHECK(genus_bound(3).conjectured_genus == 0);
  CHECK(genus_bound(4).conjectured_genus == 1);
  CHECK(genus_bound(5).conjectured_genus == 2);
  CHECK(conjectured_genus(20) == 81);
  for (int l = 1; l <= 8; ++l) {
    const auto g = genus_bound(l);
    CHECK(g.bound_consistent);
    CHECK_FALSE(g.certified);
    CHECK(g.bidegree.first + g.bidegree.second == l);
  }
}

TEST_CASE("smoothness certificate, small l") {
  const auto c2 = smoothness_certificate(2, Sign::plus);
  REQUIRE(c2.smooth.has_value());
  CHECK(*c2.smooth);
  const auto c3 = smoothness_certificate(3, Sign::plus);
  REQUIRE(c3.smooth.has_value());
  CHECK(*c3.smooth);
  const auto c4 = smoothness_certificate(4, Sign::minus);
  REQUIRE(c4.smooth.has_value());
  CHECK(*c4.smooth);
  CHECK_THROWS_AS(smoothness_certificate(1, Sign::plus), std::invalid_argument);
}

TEST_CASE("smoothness certificate on curves with known singularities") {
  // r² - μ²(μ + 1) has a node at the origin.
  const BivarPoly node = r() * r() - mu() * mu() * (mu() + k(1));
  const auto c = certify_affine_smoothness(node);
  REQUIRE(c.smooth.has_value());
  CHECK_FALSE(*c.smooth);
  CHECK(c.gcd_poly.evaluate(0, 0) == 0);

  // F_μ = 0 forces μ = 3 and F_r = 0 forces r ∈ {0, ±√2}; F is 9 or 5 there.
  const BivarPoly smooth = (r() * r() - k(2)).pow(2) - (mu() - k(3)).pow(3) + k(5);
  const auto c2 = certify_affine_smoothness(smooth);
  REQUIRE(c2.smooth.has_value());
  CHECK(*c2.smooth);

  // Cusps at (3, ±√2).
  const BivarPoly cusp = (r() * r() - k(2)).pow(2) - (mu() - k(3)).pow(3);
  const auto c3 = certify_affine_smoothness(cusp);
  REQUIRE(c3.smooth.has_value());
  CHECK_FALSE(*c3.smooth);
  CHECK_THROWS_AS(certify_affine_smoothness(mu() * r() + k(1)), std::invalid_argument);
}

TEST_CASE("real points of Xi have nonzero gradient") {
  for (int l = 2; l <= 6; ++l) {
    const BivarPoly F = xi_polynomial(l, Sign::plus).poly;
    const BivarPoly Fr = F.derivative(1), Fm = F.derivative(0);
    for (double m0 : {0.3, 0.9, 1.7, 3.1}) {
      // Real roots in r by scanning and bisection.
      auto f = [&](double rr) { return F.evaluate_as<double>(m0, rr); };
      const double lim = 4.0 * l + 4.0 * m0;
      const int steps = 4000;
      for (int i = 0; i < steps; ++i) {
        double a = -lim + 2 * lim * i / steps, b = a + 2 * lim / steps;
        if (f(a) * f(b) > 0) continue;
        for (int it = 0; it < 80; ++it) {
          const double c = 0.5 * (a + b);
          if (f(a) * f(c) <= 0) b = c;
          else a = c;
        }
        const double g = std::hypot(Fr.evaluate_as<double>(m0, a), Fm.evaluate_as<double>(m0, a));
        CHECK(g > 1e-6);
      }
    }
  }
}
