#include "heun/crosscheck/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "heun/poly/upoly.hpp"
#include "heun/spectral/spectral.hpp"
#include "heun/util/multiprec.hpp"

namespace heun::crosscheck {

using dynamics::Branch;
using dynamics::JosephsonParams;
using dynamics::kPi;
using dynamics::kTwoPi;

namespace {

// Boundary points carry a parabolic fixed point, so a loose lift can slip a
// whole turn; 1e-12 is kept even when tol asks for less.
double lift_tol_for(double tol) { return std::clamp(tol * 1e-2, 1e-13, 1e-12); }

// When ω is large both branches return within tol; the smaller residual is
// taken only if it beats the other by this factor.
constexpr double kDecisiveRatio = 100.0;

PointRecord check_point(int j, double mu, double omega, double B, double A, int s_predicted, double tol) {
  PointRecord rec;
  rec.j = j;
  rec.mu = mu;
  rec.omega = omega;
  rec.B = B;
  rec.A = A;
  rec.s_predicted = s_predicted;
  const JosephsonParams p{B, A, omega};
  const double lt = lift_tol_for(tol);
  int s_branch[2];
  double res[2];
  for (int k = 0; k < 2; ++k) {
    const double phi0 = (k == 0 ? 1.0 : -1.0) * kPi / 2;
    const double d = dynamics::integrate_lift(p, phi0, kTwoPi, lt) - phi0;
    s_branch[k] = static_cast<int>(std::lround(d / kTwoPi));
    res[k] = std::abs(d - kTwoPi * s_branch[k]);
  }
  rec.residual_plus = res[0];
  rec.residual_minus = res[1];
  bool hit_plus = res[0] < tol, hit_minus = res[1] < tol;
  if (hit_plus && hit_minus) {
    hit_plus = res[0] * kDecisiveRatio < res[1];
    hit_minus = res[1] * kDecisiveRatio < res[0];
  }
  if (hit_plus != hit_minus) {
    const int k = hit_plus ? 0 : 1;
    rec.sign_measured = hit_plus ? '+' : '-';
    rec.s_measured = s_branch[k];
    rec.max_residual = res[k];
  } else {
    rec.max_residual = std::min(res[0], res[1]);
    rec.s_measured = s_branch[res[0] <= res[1] ? 0 : 1];
  }
  rec.identity_monodromy = dynamics::monodromy(p, 1e-12).cls == dynamics::MobiusClass::identity;
  rec.pass = rec.sign_measured != '?' && rec.s_measured == rec.s_predicted && !rec.identity_monodromy;
  return rec;
}

// D^l P_l(N/D - v, v) for R = N/D.
poly::UPoly restricted_to_axis(const spectral::SpectralCurve& curve, const mpq_class& R) {
  const poly::Integer N = R.get_num(), D = R.get_den();
  const int l = curve.l;
  const poly::UPoly lin({N, -D});
  poly::UPoly out;
  for (const auto& [e, c] : curve.poly.terms()) {
    poly::Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), D.get_mpz_t(), l - e.first);
    out += (pow(lin, e.first) * (c * scale)).shifted(e.second);
  }
  return out;
}

}  // namespace

CrossCheckReport verify_simple_intersections(int l, double mu, double tol) {
  if (l < 1) throw std::invalid_argument("verify_simple_intersections: l must be >= 1");
  if (!(mu > 0.0)) throw std::invalid_argument("verify_simple_intersections: mu must be > 0");
  CrossCheckReport rep;
  rep.l = l;
  rep.mu = mu;
  rep.pass = true;
  for (const auto& pt : spectral::simple_intersections(l, mu)) {
    rep.points.push_back(check_point(pt.j, mu, pt.omega_j, pt.B, pt.A, pt.s, tol));
    rep.pass = rep.pass && rep.points.back().pass;
  }
  return rep;
}

CountReport verify_count(int l, double omega, double tol) {
  if (l < 1) throw std::invalid_argument("verify_count: l must be >= 1");
  if (!(omega > 0.0)) throw std::invalid_argument("verify_count: omega must be > 0");
  CountReport out;
  out.report.l = l;
  out.report.omega = omega;

  const spectral::SpectralCurve curve = spectral::spectral_polynomial(l);
  const mpq_class w(omega);  // exact value of the double
  const mpq_class R = 1 / (4 * w * w);
  const poly::UPoly F = restricted_to_axis(curve, R);
  out.exact_count = poly::count_positive_roots(F);

  using T = util::Mpfr128;
  const poly::UPoly G = poly::squarefree_part(F);
  std::vector<util::Cplx<T>> c, roots;
  for (const auto& k : G.coeffs()) c.emplace_back(poly::coefficient_as<T>(k));
  std::ostringstream notes;
  if (!util::aberth_roots(c, roots, T(1e-30))) notes << "root finding did not converge\n";
  std::vector<double> vs;
  for (const auto& z : roots)
    if (z.re > 0 && abs(z.im) < T(1e-20) * (1 + abs(z.re))) vs.push_back(static_cast<double>(z.re));
  std::sort(vs.begin(), vs.end());
  out.numeric_count = static_cast<int>(vs.size());

  const double Rd = R.get_d();
  bool all_pass = true;
  for (double v : vs) {
    const double mu = std::sqrt(v), lambda = Rd - v;
    const spectral::EigenSpectrum es = spectral::eigenvalues_at(l, mu);
    int j = 1;
    for (int k = 2; k <= l; ++k)
      if (std::abs(es.values[k - 1] - lambda) < std::abs(es.values[j - 1] - lambda)) j = k;
    out.report.points.push_back(
        check_point(j, mu, omega, l * omega, 2 * mu * omega, spectral::s_of_j(l, j), tol));
    const PointRecord& rec = out.report.points.back();
    all_pass = all_pass && rec.pass;
    if (rec.sign_measured != '?' && rec.s_measured == l) ++out.matched_to_l;
  }
  out.report.pass = all_pass;
  out.report.notes = notes.str();
  out.pass = out.exact_count == l && out.numeric_count == l && all_pass && out.matched_to_l == 1;
  return out;
}

std::vector<SymmetrySample> default_symmetry_samples() {
  std::vector<SymmetrySample> out;
  for (double omega : {0.5, 1.0, 2.0})
    for (int s = 0; s <= 3; ++s)
      for (double A : {0.5, 1.3}) out.push_back({s, A, omega});
  return out;
}

SymmetryReport verify_symmetries(const std::vector<SymmetrySample>& samples, double tol) {
  SymmetryReport rep;
  rep.pass = true;
  const double bp_tol = std::min(tol * 1e-2, 1e-8);
  auto add = [&](const std::string& kind, const SymmetrySample& smp, double lhs, double rhs) {
    SymmetryRecord r{kind, smp, lhs, rhs, std::abs(lhs - rhs) < tol};
    rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs));
    rep.pass = rep.pass && r.pass;
    rep.records.push_back(r);
  };
  for (const auto& smp : samples) {
    const double b_plus = dynamics::boundary_point(smp.s, Branch::plus, smp.A, smp.omega, bp_tol).B;
    const Branch mirror = smp.s % 2 == 0 ? Branch::plus : Branch::minus;
    const double b_mirror = dynamics::boundary_point(smp.s, mirror, -smp.A, smp.omega, bp_tol).B;
    add("boundary", smp, b_plus, b_mirror);
    for (double dB : {-0.25, 0.25}) {
      const double B = b_plus + dB;
      const double r1 = dynamics::rotation_number({B, smp.A, smp.omega}, tol * 1e-2).rho;
      const double r2 = dynamics::rotation_number({B, -smp.A, smp.omega}, tol * 1e-2).rho;
      const double r3 = dynamics::rotation_number({-B, smp.A, smp.omega}, tol * 1e-2).rho;
      add("rho", smp, r1, r2);
      add("rho", smp, r1, -r3);
    }
  }
  return rep;
}

OrderingReport verify_ordering(int l, const std::vector<double>& mu_grid, double tol) {
  OrderingReport rep;
  rep.l = l;
  rep.mu_grid = mu_grid;
  rep.strictly_decreasing = true;
  rep.pairing_constant = true;
  bool points_ok = true;
  for (double mu : mu_grid) {
    const CrossCheckReport cr = verify_simple_intersections(l, mu, tol);
    std::vector<double> om;
    std::vector<std::pair<int, char>> pr;
    for (const auto& p : cr.points) {
      om.push_back(p.omega);
      pr.emplace_back(p.s_measured, p.sign_measured);
      points_ok = points_ok && p.sign_measured != '?';
    }
    for (std::size_t k = 1; k < om.size(); ++k)
      if (!(om[k - 1] > om[k])) rep.strictly_decreasing = false;
    if (!rep.pairing.empty() && pr != rep.pairing.front()) rep.pairing_constant = false;
    rep.omegas.push_back(std::move(om));
    rep.pairing.push_back(std::move(pr));
  }
  rep.pass = rep.strictly_decreasing && rep.pairing_constant && points_ok;
  return rep;
}

}  // namespace heun::crosscheck
