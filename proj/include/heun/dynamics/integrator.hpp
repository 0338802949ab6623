#ifndef HEUN_DYNAMICS_INTEGRATOR_HPP
#define HEUN_DYNAMICS_INTEGRATOR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace heun::dynamics {

template <std::size_t N>
using State = std::array<double, N>;

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-10;
  double h_max = 0.5;
  long max_steps = 5'000'000;
};

struct IntegratorStats {
  long accepted = 0;
  long rejected = 0;
};

// Dormand-Prince 5(4) with FSAL and a PI step-size controller
// (Hairer, Norsett & Wanner, Solving ODEs I, II.4-5).
// Integrates y' = f(t, y) from t0 to t1 > t0 and returns y(t1).
// Throws std::runtime_error when the step size underflows or max_steps is hit.
template <std::size_t N, class F>
State<N> integrate_dp45(F&& f, double t0, State<N> y, double t1, const IntegratorOptions& opt,
                        IntegratorStats* stats = nullptr) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double safety = 0.9, beta = 0.04, alpha = 0.2 - 0.75 * beta;
  constexpr double fac_min = 0.2, fac_max = 10.0;

  if (!(t1 > t0)) {
    if (t1 == t0) return y;
    throw std::invalid_argument("integrate_dp45: t1 must not precede t0");
  }

  auto norm_ratio = [&](const State<N>& err, const State<N>& ya, const State<N>& yb) {
    double acc = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = opt.atol + opt.rtol * std::max(std::abs(ya[i]), std::abs(yb[i]));
      acc += (err[i] / sc) * (err[i] / sc);
    }
    return std::sqrt(acc / N);
  };

  State<N> k1 = f(t0, y), k2, k3, k4, k5, k6, k7, tmp, ynew, err;

  // Initial step (Hairer's hinit, simplified).
  double h;
  {
    State<N> zero{};
    const double d0 = norm_ratio(y, y, zero), d1 = norm_ratio(k1, y, zero);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min({h, opt.h_max, t1 - t0});
  }

  double t = t0;
  double err_old = 1e-4;
  bool last_rejected = false;
  long steps = 0;
  while (t < t1) {
    if (++steps > opt.max_steps) throw std::runtime_error("integrate_dp45: too many steps");
    bool last = false;
    if (t + h >= t1) {
      h = t1 - t;
      last = true;
    }
    if (h <= 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
      throw std::runtime_error("integrate_dp45: step size underflow");

    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    k2 = f(t + c2 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(t + c3 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(t + c4 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(t + c5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = f(t + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    k7 = f(t + h, ynew);
    for (std::size_t i = 0; i < N; ++i)
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

    const double e = norm_ratio(err, y, ynew);
    if (e <= 1.0) {
      if (stats) ++stats->accepted;
      t = last ? t1 : t + h;
      y = ynew;
      k1 = k7;
      double fac = e == 0.0 ? fac_max : safety * std::pow(e, -alpha) * std::pow(err_old, beta);
      fac = std::clamp(fac, fac_min, last_rejected ? 1.0 : fac_max);
      h = std::min(h * fac, opt.h_max);
      err_old = std::max(e, 1e-4);
      last_rejected = false;
    } else {
      if (stats) ++stats->rejected;
      h *= std::max(fac_min, safety * std::pow(e, -alpha));
      last_rejected = true;
    }
  }
  return y;
}

}  // namespace heun::dynamics

#endif  // HEUN_DYNAMICS_INTEGRATOR_HPP
