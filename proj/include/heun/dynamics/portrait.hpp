#ifndef HEUN_DYNAMICS_PORTRAIT_HPP
#define HEUN_DYNAMICS_PORTRAIT_HPP

#include <string>
#include <vector>

namespace heun::dynamics {

struct PortraitSpec {
  double omega = 2.0;
  double b_min = 0.0, b_max = 4.0;
  double a_min = 0.0, a_max = 8.0;
  int nx = 200, ny = 200;
  double tol = 1e-4;
  int threads = 0;  // 0: HEUN_THREADS or hardware concurrency
};

struct Portrait {
  PortraitSpec spec;
  std::vector<double> rho;  // row-major, row iy (A) outer, column ix (B) inner

  double B(int ix) const;
  double A(int iy) const;
  double at(int ix, int iy) const { return rho[static_cast<std::size_t>(iy) * spec.nx + ix]; }
};

// Worker count: requested if > 0, else $HEUN_THREADS, else hardware concurrency.
int resolve_threads(int requested);

// Throws std::invalid_argument unless nx, ny >= 2, tol > 0, ω > 0.
// Every cell is computed independently, so the result does not depend on
// the thread count.
Portrait portrait_scan(const PortraitSpec& spec);

// Fraction of cells with |ρ - round ρ| in (lo, hi).
double fractional_fraction(const Portrait& p, double lo = 0.05, double hi = 0.45);

// Header `B,A,rho`, one line per cell in raster order.
std::string portrait_csv(const Portrait& p);

}  // namespace heun::dynamics

#endif  // HEUN_DYNAMICS_PORTRAIT_HPP
