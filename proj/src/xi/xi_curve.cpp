#include "heun/xi/xi_curve.hpp"

#include <stdexcept>

#include "heun/poly/tridiag.hpp"
#include "heun/poly/upoly.hpp"
#include "heun/spectral/spectral.hpp"

namespace heun::xi {

using poly::Integer;

namespace {

BivarPoly mu_var() { return BivarPoly::variable(0, kMuR); }
BivarPoly r_var() { return BivarPoly::variable(1, kMuR); }

std::vector<std::vector<BivarPoly>> shifted_g(int l, Sign sign, bool mu_zero) {
  auto m = build_g_matrix(l);
  const BivarPoly shift = Integer(sign_value(sign)) * r_var();
  for (int i = 0; i < l; ++i) {
    if (mu_zero)
      for (auto& e : m[i]) e = poly::substitute(e, "μ", BivarPoly(kMuR));
    m[i][i] += shift;
  }
  return m;
}

}  // namespace

std::vector<std::vector<BivarPoly>> build_g_matrix(int l) {
  if (l < 1) throw std::invalid_argument("build_g_matrix: l must be >= 1");
  std::vector<std::vector<BivarPoly>> g(l, std::vector<BivarPoly>(l, BivarPoly(kMuR)));
  for (int j = 1; j <= l; ++j) {
    g[j - 1][l - j] = mu_var();
    if (j >= 2) g[j - 1][l + 1 - j] = BivarPoly::constant(-(l + 1 - j), kMuR);
  }
  return g;
}

XiCurve xi_polynomial(int l, Sign sign) {
  XiCurve c;
  c.l = l;
  c.sign = sign;
  c.poly = poly::dense_det(shifted_g(l, sign, false), kMuR);
  return c;
}

bool factorization_check(int l) {
  const auto curve = spectral::spectral_polynomial(l);
  const poly::VarNames lam_mu{"λ", "μ"};
  const BivarPoly mu = BivarPoly::variable(1, lam_mu);
  const BivarPoly p_mu = poly::substitute(curve.poly, "v", mu * mu);
  const BivarPoly lhs0 = poly::substitute(p_mu, "λ", r_var() * r_var() - mu_var() * mu_var());
  const BivarPoly lhs = l % 2 == 0 ? lhs0 : -lhs0;
  const BivarPoly rhs = xi_polynomial(l, Sign::plus).poly * xi_polynomial(l, Sign::minus).poly;
  return lhs == rhs;
}

BivarPoly mu_zero_closed_form(int l, Sign sign) {
  if (l < 1) throw std::invalid_argument("mu_zero_closed_form: l must be >= 1");
  const BivarPoly r = Integer(sign_value(sign)) * r_var();
  BivarPoly out = r;
  if (l % 2 == 0) out *= r - BivarPoly::constant(l / 2, kMuR);
  const int top = l % 2 == 0 ? (l - 2) / 2 : (l - 1) / 2;
  for (int k = 1; k <= top; ++k) out *= r * r - BivarPoly::constant(k * (l - k), kMuR);
  return out;
}

MuZeroReport mu_zero_check(int l, Sign sign) {
  const BivarPoly det0 = poly::dense_det(shifted_g(l, sign, true), kMuR);
  MuZeroReport rep;
  rep.matches_closed_form = det0 == mu_zero_closed_form(l, sign);
  const poly::UPoly u = poly::to_upoly(det0, 1);
  rep.distinct_roots = !u.is_zero() && poly::gcd(u, u.derivative()).degree() == 0;
  return rep;
}

int multiplicity_at_infinity(const XiCurve& curve, InfinityPoint point) {
  if (curve.l < 2) throw std::invalid_argument("multiplicity_at_infinity: requires l >= 2");
  const poly::VarNames a_theta{"a", "θ"};
  const int d = curve.poly.total_degree();
  const BivarPoly shift =
      BivarPoly::constant(point == InfinityPoint::p_plus ? 1 : -1, a_theta) + BivarPoly::variable(0, a_theta);
  std::vector<BivarPoly> shift_pow{BivarPoly::constant(1, a_theta)};
  for (int k = 1; k <= d; ++k) shift_pow.push_back(shift_pow.back() * shift);

  BivarPoly local(a_theta);
  for (const auto& [e, c] : curve.poly.terms()) {
    // μ^e.first r^e.second θ^(d - total), with μ = 1.
    local += c * shift_pow[e.second] * BivarPoly::monomial(1, 0, d - e.total(), a_theta);
  }
  return local.lowest_degree();
}

int multiplicity_at_infinity(int l, Sign sign, InfinityPoint point) {
  if (l < 2) throw std::invalid_argument("multiplicity_at_infinity: requires l >= 2");
  return multiplicity_at_infinity(xi_polynomial(l, sign), point);
}

int conjectured_genus(int l) {
  if (l < 1) throw std::invalid_argument("conjectured_genus: l must be >= 1");
  if (l % 2 == 0) return ((l - 2) / 2) * ((l - 2) / 2);
  return ((l - 1) / 2) * ((l - 3) / 2);
}

GenusReport genus_bound(int l, bool run_certificate) {
  GenusReport rep;
  rep.l = l;
  rep.conjectured_genus = conjectured_genus(l);
  if (l >= 2) {
    const XiCurve c = xi_polynomial(l, Sign::plus);
    rep.bidegree = {multiplicity_at_infinity(c, InfinityPoint::p_plus), multiplicity_at_infinity(c, InfinityPoint::p_minus)};
  } else {
    rep.bidegree = {0, 1};  // Ξ_1 is a line
  }
  rep.bound_consistent = (rep.bidegree.first - 1) * (rep.bidegree.second - 1) == rep.conjectured_genus;
  if (run_certificate && l >= 2) {
    const auto cert = smoothness_certificate(l, Sign::plus);
    rep.certified = cert.smooth.value_or(false) && rep.bound_consistent;
    rep.certificate_notes = cert.notes;
  } else if (run_certificate) {
    rep.certified = true;
    rep.certificate_notes = "l = 1: the curve is a line";
  } else {
    rep.certificate_notes = "certificate not run";
  }
  return rep;
}

}  // namespace heun::xi
