#ifndef HEUN_DYNAMICS_JOSEPHSON_HPP
#define HEUN_DYNAMICS_JOSEPHSON_HPP

#include <array>
#include <string>
#include <vector>

namespace heun::dynamics {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

// dφ/dτ = -sin(φ)/ω + l + 2μ cos τ with l = B/ω, μ = A/(2ω).
struct JosephsonParams {
  double B = 0.0;
  double A = 0.0;
  double omega = 1.0;

  double l() const { return B / omega; }
  double mu() const { return A / (2.0 * omega); }
  double r() const { return 1.0 / (2.0 * omega); }
  double lambda() const { return r() * r() - mu() * mu(); }
  // Throws std::invalid_argument unless ω > 0 and B, A are finite.
  void validate() const;
};

// Lift φ(τ_end) of the solution with φ(0) = φ0 (no reduction mod 2π).
// Throws std::invalid_argument for bad parameters, std::runtime_error on
// step-size underflow.
double integrate_lift(const JosephsonParams& p, double phi0, double tau_end, double tol);

// Same, started at τ = tau0.
double integrate_lift_from(const JosephsonParams& p, double tau0, double phi0, double tau_end, double tol);

// Time-2π map reduced to [0, 2π).
double poincare_map(const JosephsonParams& p, double phi0, double tol);

double wrap_angle(double x);            // to [0, 2π)
double angle_distance(double a, double b);  // on the circle, in [0, π]

enum class MobiusClass { elliptic, parabolic, hyperbolic, identity };
std::string to_string(MobiusClass c);

inline constexpr double kIdentityTol = 1e-8;
inline constexpr double kParabolicTol = 1e-8;

struct MobiusMonodromy {
  std::array<std::array<double, 2>, 2> m{};  // det = 1
  double trace = 0.0;
  MobiusClass cls = MobiusClass::elliptic;
  double identity_distance = 0.0;  // max-norm distance of m to the nearer of ±Id

  // Action on the circle coordinate φ (the projective angle is φ/2).
  double act(double phi) const;
};

MobiusMonodromy classify(std::array<std::array<double, 2>, 2> m);

// Integrates X' = [[1/(2ω), -f/2], [f/2, -1/(2ω)]] X, f = l + 2μ cos τ,
// over one period. Its projective action on φ = 2 arg X is the Poincaré map.
MobiusMonodromy monodromy(const JosephsonParams& p, double tol);

struct ConsistencyReport {
  MobiusMonodromy mono;
  std::array<double, 8> phases{};
  std::array<double, 8> lifts{};   // φ(2π) from each phase, unreduced
  double max_deviation = 0.0;      // circle distance between lift and Möbius action
};

ConsistencyReport monodromy_consistency(const JosephsonParams& p, double tol);

// Throws std::runtime_error when the Möbius action and the nonlinear map
// disagree by more than 10 tol at the 8 sample phases.
ConsistencyReport checked_poincare(const JosephsonParams& p, double tol);

struct RotationNumberResult {
  double rho = 0.0;
  long periods_used = 0;
  double error_estimate = 0.0;
  bool locked = false;  // exact integer from a detected periodic orbit
};

// Rotation number lim φ(2πk)/(2πk).
RotationNumberResult rotation_number(const JosephsonParams& p, double tol, long max_periods = 1L << 16);

// Plain averaging (φ(2πK) - φ(0))/(2πK) with K doubled until 1/K < tol or
// max_periods is reached; the error bound 1/K is rigorous for circle maps.
RotationNumberResult rotation_number_averaged(const JosephsonParams& p, double tol, long max_periods = 1L << 16);

}  // namespace heun::dynamics

#endif  // HEUN_DYNAMICS_JOSEPHSON_HPP
