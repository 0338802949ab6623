#include "heun/spectral/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "heun/poly/newton_diagram.hpp"
#include "heun/poly/tridiag.hpp"

namespace heun::spectral {

using poly::Integer;
using poly::TridiagSpec;
using poly::VarNames;

namespace {

const VarNames kLV{"λ", "v"};
const VarNames kLR{"λ", "R"};
const VarNames kLM{"λ", "μ"};

long diag_entry(int l, int j) { return static_cast<long>(1 - j) * (l - j + 1); }

}  // namespace

NumericTridiag build_h_numeric(int l, double mu) {
  if (l < 1) throw std::invalid_argument("build_h_numeric: l must be >= 1");
  NumericTridiag h;
  for (int j = 1; j <= l; ++j) h.diag.push_back(static_cast<double>(diag_entry(l, j)));
  for (int j = 1; j < l; ++j) {
    h.sup.push_back(mu * j);
    h.sub.push_back(mu * (l - j));  // H_{j+1,j} = μ(l-(j+1)+1)
  }
  return h;
}

SpectralCurve spectral_polynomial(int l) {
  if (l < 1) throw std::invalid_argument("spectral_polynomial: l must be >= 1");
  const BivarPoly lam = BivarPoly::variable(0, kLV);
  const BivarPoly v = BivarPoly::variable(1, kLV);
  TridiagSpec spec{static_cast<std::size_t>(l), {}, {}, {}};
  for (int j = 1; j <= l; ++j) spec.diag.push_back(lam + BivarPoly::constant(diag_entry(l, j), kLV));
  // After diagonal conjugation only the products sub*sup = j(l-j) v matter.
  for (int j = 1; j < l; ++j) {
    spec.sub.push_back(BivarPoly::constant(static_cast<long>(j) * (l - j), kLV));
    spec.sup.push_back(v);
  }
  SpectralCurve c;
  c.l = l;
  c.poly = poly::tridiag_det(spec, kLV);
  c.Q = poly::substitute(c.poly, "v", BivarPoly::variable(1, kLR) - BivarPoly::variable(0, kLR));
  return c;
}

CertificateReport newton_certificate(int l) {
  if (l < 2) throw std::invalid_argument("newton_certificate: requires l >= 2");
  const SpectralCurve curve = spectral_polynomial(l);
  const BivarPoly& Q = curve.Q;
  const auto L = static_cast<unsigned>(l);

  CertificateReport rep;
  rep.l = l;
  rep.lambda_coeff = Q.coeff(L, 0);
  rep.r_coeff = Q.coeff(0, 1);
  rep.lambda_power_present = rep.lambda_coeff != 0;
  rep.r_linear_present = rep.r_coeff != 0;
  rep.no_lower_pure_powers = true;
  for (unsigned k = 0; k < L; ++k)
    if (Q.coeff(k, 0) != 0) rep.no_lower_pure_powers = false;
  rep.single_edge = poly::newton_lower_hull(Q).is_single_edge({L, 0}, {0, 1});

  // Independent route: M(λ,R) with diagonal λ + (1-j)(l-j+1),
  // M_{j+1,j} = l-j and M_{j,j+1} = j(R-λ).
  const BivarPoly lam = BivarPoly::variable(0, kLR);
  const BivarPoly R = BivarPoly::variable(1, kLR);
  TridiagSpec m{L, {}, {}, {}};
  for (int j = 1; j <= l; ++j) m.diag.push_back(lam + BivarPoly::constant(diag_entry(l, j), kLR));
  for (int j = 1; j < l; ++j) {
    m.sub.push_back(BivarPoly::constant(l - j, kLR));
    m.sup.push_back(Integer(j) * (R - lam));
  }
  const BivarPoly det_m = poly::tridiag_det(m, kLR);
  const BivarPoly det_m1 = poly::substitute(det_m, "R", BivarPoly::constant(0, kLR));
  rep.matrix_route_agrees = det_m == Q && det_m1 == BivarPoly::monomial(1, L, 0, kLR);
  return rep;
}

bool leading_form_check(int l) {
  const SpectralCurve curve = spectral_polynomial(l);
  const BivarPoly mu = BivarPoly::variable(1, kLM);
  const BivarPoly p = poly::substitute(curve.poly, "v", mu * mu);
  const BivarPoly top = p.homogeneous_part(static_cast<unsigned>(l));
  BivarPoly expected = BivarPoly::constant(1, kLM);
  const BivarPoly lam = BivarPoly::variable(0, kLM);
  for (int k = 0; k < l; ++k) expected *= lam - Integer(l - 1 - 2 * k) * mu;
  return p.total_degree() == l && top == expected;
}

std::vector<double> mu_zero_roots(int l) {
  std::vector<double> out;
  for (int j = 1; j <= l; ++j) out.push_back(static_cast<double>(-diag_entry(l, j)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace heun::spectral
