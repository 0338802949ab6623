#include "heun/dynamics/josephson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heun/dynamics/integrator.hpp"

namespace heun::dynamics {

namespace {

IntegratorOptions lift_options(const JosephsonParams& p, double tol) {
  // Local error target below tol so the accumulated error over a period stays near tol.
  IntegratorOptions o;
  o.atol = std::max(tol * 1e-2, 1e-15);
  o.rtol = 0.0;
  o.h_max = std::min(kPi / 4, p.omega / 4);
  return o;
}

double max_abs(const std::array<std::array<double, 2>, 2>& m) {
  return std::max({std::abs(m[0][0]), std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[1][1])});
}

}  // namespace

void JosephsonParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("JosephsonParams: omega must be > 0");
  if (!std::isfinite(B) || !std::isfinite(A)) throw std::invalid_argument("JosephsonParams: B and A must be finite");
}

double integrate_lift_from(const JosephsonParams& p, double tau0, double phi0, double tau_end, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_lift: tol must be positive");
  const double inv_w = 1.0 / p.omega, B = p.B, A = p.A;
  auto f = [=](double tau, const State<1>& y) { return State<1>{(B + A * std::cos(tau) - std::sin(y[0])) * inv_w}; };
  return integrate_dp45<1>(f, tau0, State<1>{phi0}, tau_end, lift_options(p, tol))[0];
}

double integrate_lift(const JosephsonParams& p, double phi0, double tau_end, double tol) {
  return integrate_lift_from(p, 0.0, phi0, tau_end, tol);
}

double wrap_angle(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

double angle_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

double poincare_map(const JosephsonParams& p, double phi0, double tol) {
  return wrap_angle(integrate_lift(p, phi0, kTwoPi, tol));
}

std::string to_string(MobiusClass c) {
  switch (c) {
    case MobiusClass::elliptic: return "elliptic";
    case MobiusClass::parabolic: return "parabolic";
    case MobiusClass::hyperbolic: return "hyperbolic";
    case MobiusClass::identity: return "identity";
  }
  return "?";
}

double MobiusMonodromy::act(double phi) const {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  const double x = m[0][0] * c + m[0][1] * s;
  const double y = m[1][0] * c + m[1][1] * s;
  return wrap_angle(2.0 * std::atan2(y, x));
}

MobiusMonodromy classify(std::array<std::array<double, 2>, 2> m) {
  // The flow is traceless so det = 1 exactly; rescaling only removes
  // integration drift. When the entries are so large that the computed det
  // is pure cancellation noise, the matrix is kept as is (|trace| >> 2 then).
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double scale = std::abs(m[0][0] * m[1][1]) + std::abs(m[0][1] * m[1][0]);
  if (det > 1e-6 * scale) {
    const double s = 1.0 / std::sqrt(det);
    for (auto& row : m)
      for (auto& v : row) v *= s;
  }
  MobiusMonodromy out;
  out.m = m;
  out.trace = m[0][0] + m[1][1];
  auto dist = [&](double sign) {
    return std::max({std::abs(m[0][0] - sign), std::abs(m[0][1]), std::abs(m[1][0]), std::abs(m[1][1] - sign)});
  };
  out.identity_distance = std::min(dist(1.0), dist(-1.0));
  if (out.identity_distance < kIdentityTol) out.cls = MobiusClass::identity;
  else if (std::abs(std::abs(out.trace) - 2.0) < kParabolicTol) out.cls = MobiusClass::parabolic;
  else if (std::abs(out.trace) < 2.0) out.cls = MobiusClass::elliptic;
  else out.cls = MobiusClass::hyperbolic;
  return out;
}

MobiusMonodromy monodromy(const JosephsonParams& p, double tol) {
  p.validate();
  const double half_inv_w = 0.5 / p.omega, l = p.l(), two_mu = 2.0 * p.mu();
  auto rhs = [=](double tau, const State<4>& x) {
    // x = (X00, X10, X01, X11), columns of the fundamental matrix.
    const double hf = 0.5 * (l + two_mu * std::cos(tau));
    return State<4>{half_inv_w * x[0] - hf * x[1], hf * x[0] - half_inv_w * x[1],
                    half_inv_w * x[2] - hf * x[3], hf * x[2] - half_inv_w * x[3]};
  };
  IntegratorOptions o;
  o.rtol = tol;
  o.atol = tol * 1e-3;
  o.h_max = std::min(kPi / 4, p.omega / 4);
  const State<4> x = integrate_dp45<4>(rhs, 0.0, State<4>{1.0, 0.0, 0.0, 1.0}, kTwoPi, o);
  return classify({{{x[0], x[2]}, {x[1], x[3]}}});
}

ConsistencyReport monodromy_consistency(const JosephsonParams& p, double tol) {
  ConsistencyReport rep;
  // The linear system amplifies errors like exp(pi/omega); give it headroom.
  rep.mono = monodromy(p, std::max(tol * 1e-2, 1e-14));
  for (int i = 0; i < 8; ++i) {
    rep.phases[i] = kTwoPi * i / 8.0;
    rep.lifts[i] = integrate_lift(p, rep.phases[i], kTwoPi, tol);
    rep.max_deviation = std::max(rep.max_deviation, angle_distance(rep.lifts[i], rep.mono.act(rep.phases[i])));
  }
  return rep;
}

ConsistencyReport checked_poincare(const JosephsonParams& p, double tol) {
  ConsistencyReport rep = monodromy_consistency(p, tol);
  if (rep.max_deviation > 10.0 * tol)
    throw std::runtime_error("checked_poincare: Mobius action and lift disagree by " +
                             std::to_string(rep.max_deviation));
  return rep;
}

RotationNumberResult rotation_number_averaged(const JosephsonParams& p, double tol, long max_periods) {
  const double int_tol = std::clamp(tol * 1e-2, 1e-12, 1e-8);
  RotationNumberResult res;
  double phi = 0.0;
  long k = 0, checkpoint = 1;
  while (true) {
    phi = integrate_lift(p, phi, kTwoPi, int_tol);
    ++k;
    if (k == checkpoint) {
      res.rho = phi / (kTwoPi * k);
      res.periods_used = k;
      res.error_estimate = 1.0 / k;
      if (res.error_estimate < tol || 2 * checkpoint > max_periods) return res;
      checkpoint *= 2;
    }
  }
}

RotationNumberResult rotation_number(const JosephsonParams& p, double tol, long max_periods) {
  p.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("rotation_number: tol must be positive");
  const double int_tol = std::clamp(tol * 1e-2, 1e-12, 1e-8);
  const ConsistencyReport rep = monodromy_consistency(p, int_tol);

  // D(φ) = F(φ) - φ. Every value of D/2π lies between min and max of D/2π
  // and ρ lies in [min D, max D]/2π as well.
  double dmin = 1e300, dmax = -1e300;
  for (int i = 0; i < 8; ++i) {
    const double d = rep.lifts[i] - rep.phases[i];
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  RotationNumberResult res;
  res.periods_used = 1;
  const double s_lo = std::ceil(dmin / kTwoPi);
  if (s_lo * kTwoPi <= dmax) {
    // D - 2πs changes sign: a periodic orbit exists and ρ = s.
    res.rho = s_lo + 0.0;
    res.locked = true;
    return res;
  }
  const double k = std::floor(dmin / kTwoPi);
  const MobiusMonodromy& mono = rep.mono;
  const bool reliable = rep.max_deviation < 1e-6;
  if (reliable && mono.cls == MobiusClass::elliptic) {
    const double c = std::clamp(mono.trace / 2.0, -1.0, 1.0);
    const double beta = (mono.m[1][0] >= 0 ? 1.0 : -1.0) * std::acos(c);
    double frac = beta / kPi;
    frac -= std::floor(frac);
    // Pick the representative inside the sampled bracket.
    double best = k + frac, best_gap = 1e300;
    for (double cand : {k - 1 + frac, k + frac, k + 1 + frac}) {
      const double gap = std::max({0.0, dmin / kTwoPi - cand, cand - dmax / kTwoPi});
      if (gap < best_gap) {
        best_gap = gap;
        best = cand;
      }
    }
    const double sin_beta = std::max(std::sqrt(std::max(0.0, 1.0 - c * c)), 1e-12);
    res.rho = best;
    res.error_estimate = (rep.max_deviation + max_abs(mono.m) * int_tol) / (kTwoPi * sin_beta) + best_gap;
    if (res.error_estimate < tol) return res;
  } else if (reliable) {
    // Real eigenvector: a fixed point of the projective action.
    const auto& m = mono.m;
    double phi_star = 0.0;
    if (mono.cls != MobiusClass::identity) {
      const double tr = mono.trace;
      const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - 1.0));
      const double ev = tr / 2.0 + (tr >= 0 ? disc : -disc);
      // (M - ev) v = 0
      double vx = m[0][1], vy = ev - m[0][0];
      if (std::abs(vx) + std::abs(vy) < 1e-14) {
        vx = ev - m[1][1];
        vy = m[1][0];
      }
      phi_star = 2.0 * std::atan2(vy, vx);
    }
    const double d = integrate_lift(p, phi_star, kTwoPi, int_tol) - phi_star;
    res.rho = std::round(d / kTwoPi);
    res.locked = true;
    return res;
  }
  RotationNumberResult avg = rotation_number_averaged(p, tol, max_periods);
  return avg;
}

}  // namespace heun::dynamics
