#ifndef HEUN_SPECTRAL_SPECTRAL_HPP
#define HEUN_SPECTRAL_SPECTRAL_HPP

#include <string>
#include <vector>

#include "heun/poly/bivar_poly.hpp"

namespace heun::spectral {

using poly::BivarPoly;

// Parameters (l, λ, μ) of z²E'' + ((1-l)z + μ(1-z²))E' + (λ + μ(l-1)z)E = 0.
struct HeunParams {
  int l = 1;
  double lambda = 0.0;
  double mu = 0.0;
};

// Numeric tridiagonal matrix; sub[k] = M(k+1,k), sup[k] = M(k,k+1).
struct NumericTridiag {
  std::vector<double> diag;
  std::vector<double> sub;
  std::vector<double> sup;
};

// H_l: diag (1-j)(l-j+1), sup μj, sub μ(l-j+1) for j = 1..l.
NumericTridiag build_h_numeric(int l, double mu);

struct SpectralCurve {
  int l = 1;
  BivarPoly poly;  // P_l(λ, v) = det(H_l + λ Id) with v = μ², labels (λ, v)
  BivarPoly Q;     // P_l(λ, R - λ), labels (λ, R)
};

SpectralCurve spectral_polynomial(int l);

// Exact checks on Q(λ,R) that make its Newton diagram a single edge.
struct CertificateReport {
  int l = 0;
  bool lambda_power_present = false;   // coefficient of λ^l is nonzero
  bool r_linear_present = false;       // coefficient of R is nonzero
  bool no_lower_pure_powers = false;   // no λ^k with k < l
  bool single_edge = false;            // lower hull is (l,0)-(0,1)
  bool matrix_route_agrees = false;    // det M(λ,R) equals Q and det M(λ,0) = λ^l
  poly::Integer lambda_coeff;
  poly::Integer r_coeff;

  bool pass() const {
    return lambda_power_present && r_linear_present && no_lower_pure_powers && single_edge && matrix_route_agrees;
  }
};

// Throws std::invalid_argument for l < 2.
CertificateReport newton_certificate(int l);

// Top homogeneous part of P_l(λ, μ²) equals ∏_{k=0}^{l-1} (λ - (l-1-2k)μ).
bool leading_form_check(int l);

// Roots of P_l(λ, 0): (j-1)(l-j+1), j = 1..l, with multiplicity, ascending.
std::vector<double> mu_zero_roots(int l);

struct EigenSpectrum {
  double mu = 0.0;
  std::vector<double> values;  // ascending
  double min_gap = 0.0;        // computed at working precision
  int digits = 16;             // decimal digits of the arithmetic that isolated every root
};

// Eigenvalues of -H_l (the roots λ of P_l(λ, μ²)) by Sturm-count bisection on
// the symmetrized matrix. Each root is isolated from its neighbours; the
// arithmetic precision is raised until that succeeds.
// Throws std::invalid_argument for μ = 0 or l < 1, std::runtime_error if the
// roots cannot be isolated at the highest supported precision.
EigenSpectrum eigenvalues_at(int l, double mu, double tol = 1e-12);

// R_j = λ_j + μ², ascending, each to relative accuracy tol. R_1 becomes
// exponentially small in l for small μ, so these are isolated directly as
// eigenvalues of μ² Id - H_l rather than by adding μ² to λ_j.
// Throws std::runtime_error if some R_j <= 0 or cannot be resolved.
std::vector<double> shifted_roots(int l, double mu, double tol = 1e-12);

// |P_l(λ, μ²)| / (max|c_k| max(1,|λ|)^l) where c_k are the coefficients of
// P_l(·, μ²); evaluated in extended precision.
double curve_residual(const SpectralCurve& curve, double lambda, double mu);

inline constexpr double kCurveGate = 1e-9;

struct SimpleIntersectionPoint {
  int j = 0;
  double mu = 0.0;
  double lambda_j = 0.0;
  double R_j = 0.0;
  double omega_j = 0.0;
  double B = 0.0;
  double A = 0.0;
  int s = 0;
};

// s(j) = l-j+1 for odd j, l-j for even j.
int s_of_j(int l, int j);

// Throws std::invalid_argument for μ <= 0 and std::runtime_error if some
// R_j <= 0.
std::vector<SimpleIntersectionPoint> simple_intersections(int l, double mu, double tol = 1e-12);

struct PolynomialSolution {
  std::vector<double> coeffs;  // a_0 .. a_{l-1}, max |a_k| = 1
  double residual = 0.0;       // max |coefficient| of the image under the Heun operator
};

// Throws std::invalid_argument when μ = 0 or λ fails the curve gate.
PolynomialSolution polynomial_solution(int l, double lambda, double mu);

// Coefficients of the Heun operator applied to Σ a_k z^k, degrees 0..l+1.
std::vector<double> heun_operator_image(int l, double lambda, double mu, const std::vector<double>& a);

}  // namespace heun::spectral

#endif  // HEUN_SPECTRAL_SPECTRAL_HPP
