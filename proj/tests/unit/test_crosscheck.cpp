#include <cmath>

#include "doctest.h"
#include "heun/crosscheck/crosscheck.hpp"
#include "heun/spectral/spectral.hpp"

using namespace heun::crosscheck;

TEST_CASE("l = 2 at omega = 0.3 lands on the predicted boundaries") {
  // λ² - λ - μ² = 0 with λ = R - μ², R = 1/(4ω²), solved by hand.
  const double w = 0.3;
  const double mu_plus = std::sqrt(1 - 2 * w) / (2 * w), mu_minus = std::sqrt(1 + 2 * w) / (2 * w);

  const auto rp = verify_simple_intersections(2, mu_plus);
  CHECK(rp.pass);
  const PointRecord* at_w = nullptr;
  for (const auto& p : rp.points)
    if (std::abs(p.omega - w) < 1e-9) at_w = &p;
  REQUIRE(at_w != nullptr);
  CHECK(at_w->s_measured == 0);
  CHECK(at_w->sign_measured == '+');
  CHECK(at_w->max_residual < 1e-6);

  const auto rm = verify_simple_intersections(2, mu_minus);
  CHECK(rm.pass);
  at_w = nullptr;
  for (const auto& p : rm.points)
    if (std::abs(p.omega - w) < 1e-9) at_w = &p;
  REQUIRE(at_w != nullptr);
  CHECK(at_w->s_measured == 2);
  CHECK(at_w->sign_measured == '-');
  CHECK(at_w->max_residual < 1e-6);
}

TEST_CASE("every point matches s(j) for l <= 6") {
  for (int l = 1; l <= 6; ++l)
    for (double mu : {0.5, 1.0, 2.0}) {
      const auto r = verify_simple_intersections(l, mu);
      CHECK_MESSAGE(r.pass, "l=" << l << " mu=" << mu);
      REQUIRE(r.points.size() == static_cast<std::size_t>(l));
      for (const auto& p : r.points) {
        CHECK(p.s_measured == heun::spectral::s_of_j(l, p.j));
        CHECK(!p.identity_monodromy);
        CHECK(p.max_residual < 1e-6);
      }
    }
  const auto one = verify_simple_intersections(1, 0.7);
  REQUIRE(one.points.size() == 1);
  CHECK(one.points[0].s_measured == 1);
  CHECK_THROWS_AS(verify_simple_intersections(2, -1.0), std::invalid_argument);
}

TEST_CASE("counts on the axis") {
  const std::pair<int, double> cases[] = {{1, 0.2}, {2, 0.3}, {3, 0.1}, {4, 0.08}};
  for (auto [l, w] : cases) {
    const auto c = verify_count(l, w);
    CHECK_MESSAGE(c.pass, "l=" << l);
    CHECK(c.exact_count == l);
    CHECK(c.numeric_count == l);
    CHECK(c.matched_to_l == 1);
  }
  // l = 1: P_1 = λ, so μ² = R.
  const auto c1 = verify_count(1, 0.2);
  REQUIRE(c1.report.points.size() == 1);
  CHECK(c1.report.points[0].mu == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("boundary and rotation-number symmetries") {
  const std::vector<SymmetrySample> samples{{0, 0.5, 1.0}, {1, 0.5, 1.0}, {2, 0.0, 1.0}, {3, 1.1, 0.5}};
  const auto r = verify_symmetries(samples);
  CHECK(r.pass);
  CHECK(r.max_deviation < 1e-6);
  CHECK(r.records.size() == samples.size() * 5);
}

TEST_CASE("ordering and pairing constancy") {
  const auto r = verify_ordering(4, {0.5, 1.0, 2.0, 4.0});
  CHECK(r.strictly_decreasing);
  CHECK(r.pairing_constant);
  CHECK(r.pass);
  const auto r3 = verify_ordering(3, {0.5, 1.0, 2.0});
  CHECK(r3.pass);
  REQUIRE(r3.pairing.size() == 3);
  CHECK(r3.pairing[0][0].first == 3);
  CHECK(verify_ordering(1, {0.5, 2.0}).pass);
}
