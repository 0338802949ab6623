#ifndef HEUN_DYNAMICS_BOUNDARY_HPP
#define HEUN_DYNAMICS_BOUNDARY_HPP

#include <string>
#include <vector>

#include "heun/dynamics/josephson.hpp"

namespace heun::dynamics {

enum class Branch { plus, minus };
inline const char* to_string(Branch b) { return b == Branch::plus ? "+" : "-"; }
inline double branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

// B = g_{s,±}(A): the lift from φ0 = ±π/2 returns to φ0 + 2πs.
struct BoundaryPoint {
  int s = 0;
  Branch sign = Branch::plus;
  double A = 0.0;
  double omega = 1.0;
  double B = 0.0;
  double residual = 0.0;  // |g(B)|
};

// g(B) = φ(2π) - φ0 - 2πs with φ(0) = φ0 = ±π/2; increasing in B.
double boundary_function(int s, Branch sign, double A, double omega, double B, double tol);

// Bisection on g over [max(0, sω-3), √(s²ω²+1)+3+|A|], widened once to
// [sω-2-|A|, sω+2+|A|] (which always brackets). Throws std::invalid_argument
// for s < 0 or ω <= 0, std::runtime_error if no bracket is found.
BoundaryPoint boundary_point(int s, Branch sign, double A, double omega, double tol = 1e-10);

double growth_point(int s, double omega);

struct Constriction {
  int s = 1;
  double omega = 1.0;
  double B = 0.0;  // sω
  double A = 0.0;
  double identity_distance = 0.0;
  double trace = 0.0;
  double return_error = 0.0;  // max over 8 phases of |φ(2π) - φ0 - 2πs|
  double rho = 0.0;
};

// Scans A on the axis B = sω for local minima of the distance of the
// monodromy to ±Id, refines them with Brent's method and keeps those whose
// Poincaré map fixes 8 sample phases within tol with ρ = s.
std::vector<Constriction> constriction_search(int s, double omega, double a_min, double a_max,
                                              double tol = 1e-6, int n_scan = 400);

}  // namespace heun::dynamics

#endif  // HEUN_DYNAMICS_BOUNDARY_HPP
