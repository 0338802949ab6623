#ifndef HEUN_CROSSCHECK_CROSSCHECK_HPP
#define HEUN_CROSSCHECK_CROSSCHECK_HPP

#include <string>
#include <vector>

#include "heun/dynamics/boundary.hpp"

namespace heun::crosscheck {

inline constexpr double kMatchTol = 1e-6;

struct PointRecord {
  int j = 0;
  double mu = 0.0;
  double omega = 0.0;
  double B = 0.0;
  double A = 0.0;
  int s_predicted = 0;
  int s_measured = 0;
  char sign_measured = '?';  // '+', '-', or '?' when no single sign matched
  double residual_plus = 0.0;   // |φ(2π) - φ0 - 2πs| from φ0 = +π/2, nearest integer s
  double residual_minus = 0.0;  // same from -π/2
  double max_residual = 0.0;    // residual of the matched sign (min of both if none)
  bool identity_monodromy = false;
  bool pass = false;
};

struct CrossCheckReport {
  int l = 0;
  double mu = 0.0;     // set by verify_simple_intersections
  double omega = 0.0;  // set by verify_count
  std::vector<PointRecord> points;
  bool pass = false;
  std::string notes;
};

// Each algebraic point Π_j at this μ must lie on exactly one of ∂L_{s,±},
// with s equal to s(j), and must not be a constriction.
CrossCheckReport verify_simple_intersections(int l, double mu, double tol = kMatchTol);

// The positive roots μ² of P_l(1/(4ω²) - μ², μ²), counted exactly by Sturm
// sequences over Q and located numerically, then matched dynamically.
// Passes when there are exactly l of them, all match, and exactly one has
// s = l.
struct CountReport {
  CrossCheckReport report;
  int exact_count = 0;
  int numeric_count = 0;
  int matched_to_l = 0;
  bool pass = false;
};

CountReport verify_count(int l, double omega, double tol = kMatchTol);

struct SymmetrySample {
  int s = 0;
  double A = 0.0;
  double omega = 1.0;
};

struct SymmetryRecord {
  std::string kind;  // "boundary" or "rho"
  SymmetrySample sample;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct SymmetryReport {
  std::vector<SymmetryRecord> records;
  double max_deviation = 0.0;
  bool pass = false;
};

// The fixed sample set used by the CLI and the tests.
std::vector<SymmetrySample> default_symmetry_samples();

// Boundary symmetry: g_{s,+}(A) = g_{s,+}(-A) for even s and
// g_{s,+}(A) = g_{s,-}(-A) for odd s. Rotation-number symmetry at
// B = g_{s,+}(A) ± 0.25: ρ(B, A) = ρ(B, -A) and ρ(-B, A) = -ρ(B, A).
SymmetryReport verify_symmetries(const std::vector<SymmetrySample>& samples, double tol = kMatchTol);

struct OrderingReport {
  int l = 0;
  std::vector<double> mu_grid;
  std::vector<std::vector<double>> omegas;                 // per μ, j = 1..l
  std::vector<std::vector<std::pair<int, char>>> pairing;  // measured (s, sign) per μ
  bool strictly_decreasing = false;
  bool pairing_constant = false;
  bool pass = false;
};

OrderingReport verify_ordering(int l, const std::vector<double>& mu_grid, double tol = kMatchTol);

}  // namespace heun::crosscheck

#endif  // HEUN_CROSSCHECK_CROSSCHECK_HPP
