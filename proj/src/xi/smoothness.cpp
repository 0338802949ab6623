#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "heun/poly/resultant.hpp"
#include "heun/poly/upoly.hpp"
#include "heun/util/multiprec.hpp"
#include "heun/xi/xi_curve.hpp"

namespace heun::xi {

namespace {

using util::Cplx;

constexpr double kZeroThreshold = 1e-25;
constexpr double kClearlyNonzero = 1e-12;

enum class Verdict { smooth, singular, undecided };

BivarPoly abs_coefficients(const BivarPoly& p) {
  BivarPoly::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(e, abs(c));
  return BivarPoly(p.vars(), std::move(t));
}

template <class T>
T relative_value(const BivarPoly& p, const BivarPoly& p_abs, const Cplx<T>& mu, const Cplx<T>& r) {
  const T scale = p_abs.evaluate_as<T>(util::norm(mu), util::norm(r));
  const T value = util::norm(p.evaluate_as<Cplx<T>>(mu, r));
  if (scale == 0) return T(0);
  return value / scale;
}

// Coefficients in r of p(μ0, r), low degree first.
template <class T>
std::vector<Cplx<T>> coefficients_in_r(const BivarPoly& p, const Cplx<T>& mu0) {
  std::vector<Cplx<T>> c(p.degree(1) + 1);
  for (const auto& [e, coeff] : p.terms()) {
    Cplx<T> term(poly::coefficient_as<T>(coeff));
    for (unsigned k = 0; k < e.first; ++k) term = term * mu0;
    c[e.second] += term;
  }
  return c;
}

template <class T>
Verdict check_candidates(const poly::UPoly& g, const BivarPoly& F, const BivarPoly& F_r, const BivarPoly& F_mu,
                         const T& root_tol, bool final_precision, SmoothnessCertificate& cert, std::ostream& notes) {
  std::vector<Cplx<T>> gc;
  for (const auto& c : g.coeffs()) gc.emplace_back(poly::coefficient_as<T>(c));
  std::vector<Cplx<T>> mu_roots;
  if (!util::aberth_roots(gc, mu_roots, root_tol)) {
    notes << "root finding for the gcd did not converge\n";
    return Verdict::undecided;
  }
  const BivarPoly F_abs = abs_coefficients(F), F_mu_abs = abs_coefficients(F_mu);
  bool ambiguous = false;
  cert.candidates_checked = 0;
  for (const auto& mu0 : mu_roots) {
    std::vector<Cplx<T>> r_roots;
    if (!util::aberth_roots(coefficients_in_r(F_r, mu0), r_roots, root_tol)) {
      notes << "root finding for F_r did not converge\n";
      return Verdict::undecided;
    }
    for (const auto& r0 : r_roots) {
      ++cert.candidates_checked;
      const T vf = relative_value(F, F_abs, mu0, r0);
      const T vm = relative_value(F_mu, F_mu_abs, mu0, r0);
      const T worst = vf > vm ? vf : vm;
      if (worst < T(kZeroThreshold)) {
        notes << "singular point near mu = " << static_cast<double>(mu0.re) << (mu0.im < 0 ? " - " : " + ")
              << static_cast<double>(abs(mu0.im)) << "i, r = " << static_cast<double>(r0.re)
              << (r0.im < 0 ? " - " : " + ") << static_cast<double>(abs(r0.im)) << "i\n";
        return Verdict::singular;
      }
      if (!final_precision && worst < T(kClearlyNonzero)) ambiguous = true;
    }
  }
  return ambiguous ? Verdict::undecided : Verdict::smooth;
}

}  // namespace

SmoothnessCertificate smoothness_certificate(int l, Sign sign) {
  if (l < 2) throw std::invalid_argument("smoothness_certificate: requires l >= 2");
  SmoothnessCertificate cert = certify_affine_smoothness(xi_polynomial(l, sign).poly);
  cert.l = l;
  cert.sign = sign;
  return cert;
}

SmoothnessCertificate certify_affine_smoothness(const BivarPoly& F) {
  if (F.vars() != kMuR) throw std::invalid_argument("certify_affine_smoothness: expected labels (μ, r)");
  SmoothnessCertificate cert;
  std::ostringstream notes;
  const BivarPoly F_mu = F.derivative(0);
  const BivarPoly F_r = F.derivative(1);
  const int dr = F.degree(1);
  const auto lead_r = F.coeff(0, static_cast<unsigned>(std::max(dr, 0)));
  if (dr < 1 || lead_r == 0)
    throw std::invalid_argument("certify_affine_smoothness: leading coefficient in r must be a nonzero constant");
  for (const auto& [e, c] : F.terms())
    if (e.second == static_cast<unsigned>(dr) && e.first > 0)
      throw std::invalid_argument("certify_affine_smoothness: leading coefficient in r must be a nonzero constant");
  notes << "leading coefficient in r is the constant " << lead_r.get_str()
        << ", so resultants in r specialize at every mu0\n";

  const BivarPoly R1 = poly::resultant(F, F_r, "r");
  const BivarPoly R2 = poly::resultant(F, F_mu, "r");
  notes << "deg Res_r(F, F_r) = " << R1.total_degree() << ", deg Res_r(F, F_mu) = " << R2.total_degree() << "\n";
  if (R1.is_zero() || R2.is_zero()) {
    notes << "a resultant vanishes identically; F is not squarefree in r or shares a factor with F_mu\n";
    cert.gcd_poly = BivarPoly(kMuR);
    cert.notes = notes.str();
    return cert;
  }
  const poly::UPoly G = poly::gcd(poly::to_upoly(R1, 0), poly::to_upoly(R2, 0));
  cert.gcd_poly = poly::to_bivar(G, 0, kMuR);
  notes << "deg gcd = " << G.degree() << "\n";
  if (G.degree() == 0) {
    cert.smooth = true;
    notes << "no mu0 carries a common zero of F, F_r and F_mu\n";
    cert.notes = notes.str();
    return cert;
  }

  const poly::UPoly g = poly::squarefree_part(G);
  cert.precision_bits = 128;
  Verdict v = check_candidates<util::Mpfr128>(g, F, F_r, F_mu, util::Mpfr128("1e-30"), false, cert, notes);
  if (v == Verdict::undecided) {
    notes << "escalating to 256 bits\n";
    cert.precision_bits = 256;
    v = check_candidates<util::Mpfr256>(g, F, F_r, F_mu, util::Mpfr256("1e-65"), true, cert, notes);
  }
  if (v == Verdict::smooth) {
    cert.smooth = true;
    notes << "all " << cert.candidates_checked << " candidates (mu0 root of gcd, r0 root of F_r) fail F = F_mu = 0\n";
  } else if (v == Verdict::singular) {
    cert.smooth = false;
  } else {
    notes << "undecided within the precision budget\n";
  }
  cert.notes = notes.str();
  return cert;
}

}  // namespace heun::xi
