#include "heun/dynamics/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heun::dynamics {

namespace {

// The distance to ±Id has a corner at a constriction, so interpolating
// minimizers stall; golden-section search does not care.
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, double xtol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

double boundary_function(int s, Branch sign, double A, double omega, double B, double tol) {
  const double phi0 = branch_sign(sign) * kPi / 2;
  return integrate_lift(JosephsonParams{B, A, omega}, phi0, kTwoPi, tol) - phi0 - kTwoPi * s;
}

double growth_point(int s, double omega) { return std::sqrt(double(s) * s * omega * omega + 1.0); }

BoundaryPoint boundary_point(int s, Branch sign, double A, double omega, double tol) {
  if (s < 0) throw std::invalid_argument("boundary_point: s must be >= 0");
  JosephsonParams{0.0, A, omega}.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("boundary_point: tol must be positive");
  const double lift_tol = std::clamp(tol * 1e-2, 1e-13, 1e-8);
  auto g = [&](double B) { return boundary_function(s, sign, A, omega, B, lift_tol); };

  const double sw = s * omega;
  double lo = std::max(0.0, sw - 3.0), hi = growth_point(s, omega) + 3.0 + std::abs(A);
  double glo = g(lo), ghi = g(hi);
  if (!(glo <= 0.0 && ghi >= 0.0)) {
    // |ω dφ/dτ - B| <= 1 + |A|, so g changes sign on this interval.
    lo = sw - 2.0 - std::abs(A);
    hi = sw + 2.0 + std::abs(A);
    glo = g(lo);
    ghi = g(hi);
    if (!(glo <= 0.0 && ghi >= 0.0)) throw std::runtime_error("boundary_point: no bracket for g(B)");
  }
  while (hi - lo > tol * 1e-2 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    (gm < 0.0 ? lo : hi) = mid;
  }
  BoundaryPoint bp;
  bp.s = s;
  bp.sign = sign;
  bp.A = A;
  bp.omega = omega;
  bp.B = 0.5 * (lo + hi);
  bp.residual = std::abs(g(bp.B));
  return bp;
}

std::vector<Constriction> constriction_search(int s, double omega, double a_min, double a_max, double tol,
                                              int n_scan) {
  if (s < 1) throw std::invalid_argument("constriction_search: s must be >= 1");
  if (!(a_max > a_min)) throw std::invalid_argument("constriction_search: empty A range");
  if (n_scan < 3) throw std::invalid_argument("constriction_search: n_scan must be >= 3");
  const double B = s * omega;
  const double int_tol = 1e-12;
  auto dist = [&](double A) { return monodromy(JosephsonParams{B, A, omega}, int_tol).identity_distance; };

  std::vector<double> as(n_scan), ds(n_scan);
  for (int i = 0; i < n_scan; ++i) {
    as[i] = a_min + (a_max - a_min) * i / (n_scan - 1);
    ds[i] = dist(as[i]);
  }
  std::vector<Constriction> out;
  for (int i = 1; i + 1 < n_scan; ++i) {
    if (!(ds[i] <= ds[i - 1] && ds[i] < ds[i + 1])) continue;
    const auto [a_star, d_star] = golden_min(dist, as[i - 1], as[i + 1], 1e-13 * std::max(1.0, std::abs(as[i])));
    const JosephsonParams p{B, a_star, omega};
    const MobiusMonodromy mono = monodromy(p, int_tol);
    Constriction c;
    c.s = s;
    c.omega = omega;
    c.B = B;
    c.A = a_star;
    c.identity_distance = d_star;
    c.trace = mono.trace;
    for (int k = 0; k < 8; ++k) {
      const double phi0 = kTwoPi * k / 8.0;
      c.return_error =
          std::max(c.return_error, std::abs(integrate_lift(p, phi0, kTwoPi, int_tol) - phi0 - kTwoPi * s));
    }
    c.rho = rotation_number(p, tol).rho;
    if (c.return_error < tol && c.rho == s) {
      if (out.empty() || std::abs(out.back().A - c.A) > 1e-6 * std::max(1.0, std::abs(c.A))) out.push_back(c);
    }
  }
  return out;
}

}  // namespace heun::dynamics
