#ifndef HEUN_XI_XI_CURVE_HPP
#define HEUN_XI_XI_CURVE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heun/poly/bivar_poly.hpp"

namespace heun::xi {

using poly::BivarPoly;

enum class Sign { plus, minus };
enum class InfinityPoint { p_plus, p_minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }
inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }

// Labels of every polynomial produced here.
inline const poly::VarNames kMuR{"μ", "r"};

// 𝒢_l over (μ, r): (j, l+1-j) = μ and (j, l+2-j) = -(l+1-j), 1-based.
std::vector<std::vector<BivarPoly>> build_g_matrix(int l);

struct XiCurve {
  int l = 1;
  Sign sign = Sign::plus;
  BivarPoly poly;  // det(𝒢_l ± r Id) in (μ, r)
};

XiCurve xi_polynomial(int l, Sign sign);

// P_l(r²-μ², μ²)(-1)^l == det(𝒢_l + r Id) det(𝒢_l - r Id), exactly.
bool factorization_check(int l);

// The μ = 0 specialization predicted in closed form:
// odd l:  r ∏_{k=1}^{(l-1)/2} (r² - k(l-k)),
// even l: r (r - l/2) ∏_{k=1}^{(l-2)/2} (r² - k(l-k)).
// For Sign::minus r is replaced by -r.
BivarPoly mu_zero_closed_form(int l, Sign sign);

struct MuZeroReport {
  bool matches_closed_form = false;
  bool distinct_roots = false;
};

// Compares det(𝒢_l ± r Id) at μ = 0 with the closed form and checks that it
// has no multiple roots. Works on the specialized matrix, so it is cheap for
// large l.
MuZeroReport mu_zero_check(int l, Sign sign);

// Multiplicity of the projective closure of the curve at p± = (1 : ±1 : 0):
// homogenize with θ, set μ = 1, put r = ±1 + a and return the degree of the
// lowest nonzero homogeneous part in (a, θ).
// Throws std::invalid_argument for l < 2.
int multiplicity_at_infinity(const XiCurve& curve, InfinityPoint point);
int multiplicity_at_infinity(int l, Sign sign, InfinityPoint point);

struct GenusReport {
  int l = 1;
  int conjectured_genus = 0;
  std::pair<int, int> bidegree{0, 0};  // multiplicities of Ξ_l^+ at (p+, p-)
  bool bound_consistent = false;       // (d1-1)(d2-1) == conjectured_genus
  bool certified = false;
  std::string certificate_notes;
};

int conjectured_genus(int l);

// With run_certificate the smoothness certificate of Ξ_l^+ is attempted and
// `certified` reflects its outcome.
GenusReport genus_bound(int l, bool run_certificate = false);

struct SmoothnessCertificate {
  int l = 2;
  Sign sign = Sign::plus;
  BivarPoly gcd_poly;         // gcd(Res_r(F, F_r), Res_r(F, F_μ)) as a polynomial in μ
  std::optional<bool> smooth;  // empty when undecided
  int candidates_checked = 0;  // (μ0, r0) pairs tested
  int precision_bits = 0;      // highest precision used
  std::string notes;
};

// Throws std::invalid_argument for l < 2.
SmoothnessCertificate smoothness_certificate(int l, Sign sign);

// The same test for any F(μ, r) whose leading coefficient in r is a nonzero
// integer: F is smooth on C² iff F, F_r, F_μ have no common zero there.
SmoothnessCertificate certify_affine_smoothness(const BivarPoly& F);

}  // namespace heun::xi

#endif  // HEUN_XI_XI_CURVE_HPP
