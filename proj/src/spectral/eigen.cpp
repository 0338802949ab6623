#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/mpfr.hpp>

#include "heun/spectral/spectral.hpp"

namespace heun::spectral {

namespace {

namespace mp = boost::multiprecision;
template <unsigned Digits>
using Mpfr = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

using std::abs;
using mp::abs;
using std::sqrt;
using mp::sqrt;

// -H_l in symmetric form: diagonal (j-1)(l-j+1), squared off-diagonals μ² j(l-j).
template <class T>
struct SturmMatrix {
  std::vector<T> d;
  std::vector<T> e2;
  T pivmin;
};

template <class T>
SturmMatrix<T> make_sturm(int l, double mu, bool shift_by_mu2 = false) {
  SturmMatrix<T> m;
  const T mu2 = T(mu) * T(mu);
  T emax = T(1);
  for (int j = 1; j <= l; ++j) m.d.push_back(T((j - 1) * (l - j + 1)) + (shift_by_mu2 ? mu2 : T(0)));
  for (int j = 1; j < l; ++j) {
    m.e2.push_back(mu2 * T(j) * T(l - j));
    emax = std::max(emax, m.e2.back());
  }
  m.pivmin = std::numeric_limits<T>::min() * emax;
  return m;
}

// Number of eigenvalues strictly below x (LDL^T inertia, dstebz style).
template <class T>
int count_below(const SturmMatrix<T>& m, const T& x) {
  int count = 0;
  T q = m.d[0] - x;
  if (abs(q) <= m.pivmin) q = -m.pivmin;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < m.d.size(); ++i) {
    q = m.d[i] - x - m.e2[i - 1] / q;
    if (abs(q) <= m.pivmin) q = -m.pivmin;
    if (q < 0) ++count;
  }
  return count;
}

struct Isolated {
  std::vector<double> values;
  double min_gap;
};

// With `relative` the stopping rule is width < tol |mid|, for roots that may
// be tiny compared with the matrix entries.
template <class T>
std::optional<Isolated> isolate_all(int l, double mu, double tol, bool shift_by_mu2 = false, bool relative = false) {
  const SturmMatrix<T> m = make_sturm<T>(l, mu, shift_by_mu2);
  T lo = m.d[0], hi = m.d[0];
  for (int i = 0; i < l; ++i) {
    T radius = T(0);
    if (i > 0) radius += sqrt(m.e2[i - 1]);
    if (i + 1 < l) radius += sqrt(m.e2[i]);
    lo = std::min(lo, T(m.d[i] - radius));
    hi = std::max(hi, T(m.d[i] + radius));
  }
  lo -= 1;
  hi += 1;
  const T eps = std::numeric_limits<T>::epsilon();

  std::vector<T> mids;
  for (int k = 0; k < l; ++k) {
    T a = lo, b = hi;
    int ca = 0, cb = l;
    while (true) {
      const T mid = (a + b) / 2;
      const T width = b - a;
      const bool isolated = ca == k && cb == k + 1;
      if (isolated && width < T(tol) * (relative ? abs(mid) : 1 + abs(mid))) {
        mids.push_back(mid);
        break;
      }
      const T scale = std::max({T(1), abs(a), abs(b)});
      if (width <= 8 * eps * scale) return std::nullopt;
      const int c = count_below(m, mid);
      if (c <= k) {
        a = mid;
        ca = c;
      } else {
        b = mid;
        cb = c;
      }
    }
  }
  Isolated out;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < l; ++k) {
    out.values.push_back(static_cast<double>(mids[k]));
    if (k > 0) out.min_gap = std::min(out.min_gap, static_cast<double>(T(mids[k] - mids[k - 1])));
  }
  return out;
}

// Solves (m + shift Id) x = b by Gaussian elimination with partial pivoting
// (the dgtsv scheme). Exactly zero pivots are replaced by `tiny`, which is
// what inverse iteration on a singular matrix wants.
std::vector<double> solve_tridiag(const NumericTridiag& m, double shift, std::vector<double> b, double tiny) {
  const std::size_t n = m.diag.size();
  std::vector<double> d(m.diag), dl(m.sub), du(m.sup);
  for (auto& x : d) x += shift;
  std::vector<double> du2(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (abs(d[i]) >= abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
      du2[i] = 0.0;
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      du[i] = temp;
      const double tb = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tb - fact * b[i + 1];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  b[n - 1] /= d[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  if (n > 2)
    for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  return b;
}

}  // namespace

EigenSpectrum eigenvalues_at(int l, double mu, double tol) {
  if (l < 1) throw std::invalid_argument("eigenvalues_at: l must be >= 1");
  if (mu == 0.0) throw std::invalid_argument("eigenvalues_at: mu = 0 has multiple roots, see mu_zero_roots");
  if (!(tol > 0.0)) throw std::invalid_argument("eigenvalues_at: tol must be positive");

  EigenSpectrum out;
  out.mu = mu;
  std::optional<Isolated> r;
  if ((r = isolate_all<double>(l, mu, tol))) {
    out.digits = 16;
  } else if ((r = isolate_all<Mpfr<50>>(l, mu, tol))) {
    out.digits = 50;
  } else if ((r = isolate_all<Mpfr<100>>(l, mu, tol))) {
    out.digits = 100;
  } else if ((r = isolate_all<Mpfr<200>>(l, mu, tol))) {
    out.digits = 200;
  } else if ((r = isolate_all<Mpfr<400>>(l, mu, tol))) {
    out.digits = 400;
  } else {
    throw std::runtime_error("eigenvalues_at: roots not isolated at 400 digits");
  }
  out.values = std::move(r->values);
  out.min_gap = l > 1 ? r->min_gap : 0.0;
  return out;
}

std::vector<double> shifted_roots(int l, double mu, double tol) {
  if (l < 1) throw std::invalid_argument("shifted_roots: l must be >= 1");
  if (mu == 0.0) throw std::invalid_argument("shifted_roots: requires mu != 0");
  if (!(tol > 0.0)) throw std::invalid_argument("shifted_roots: tol must be positive");
  // A Sturm count only resolves roots down to about eps times the matrix
  // norm, so a result is accepted once the next precision level confirms it.
  auto agree = [&](const std::optional<Isolated>& a, const std::optional<Isolated>& b) {
    if (!a || !b) return false;
    for (int k = 0; k < l; ++k)
      if (!(abs(a->values[k] - b->values[k]) <= 4 * tol * abs(b->values[k]))) return false;
    return true;
  };
  std::optional<Isolated> prev = isolate_all<double>(l, mu, tol, true, true);
  std::optional<Isolated> cur = isolate_all<Mpfr<50>>(l, mu, tol, true, true);
  if (agree(prev, cur)) return cur->values;
  prev = std::move(cur);
  cur = isolate_all<Mpfr<100>>(l, mu, tol, true, true);
  if (agree(prev, cur)) return cur->values;
  prev = std::move(cur);
  cur = isolate_all<Mpfr<200>>(l, mu, tol, true, true);
  if (agree(prev, cur)) return cur->values;
  prev = std::move(cur);
  cur = isolate_all<Mpfr<400>>(l, mu, tol, true, true);
  if (agree(prev, cur)) return cur->values;
  throw std::runtime_error("shifted_roots: R_j not resolved at 400 digits");
}

double curve_residual(const SpectralCurve& curve, double lambda, double mu) {
  using T = Mpfr<100>;
  const int l = curve.l;
  std::vector<T> c(l + 1, T(0));
  const T v = T(mu) * T(mu);
  for (const auto& [e, coeff] : curve.poly.terms()) c[e.first] += T(coeff.get_str()) * pow(v, static_cast<int>(e.second));
  T value = 0, cmax = 0;
  for (int k = l; k >= 0; --k) {
    value = value * T(lambda) + c[k];
    cmax = std::max(cmax, T(abs(c[k])));
  }
  const T scale = cmax * pow(std::max(T(1), T(abs(T(lambda)))), l);
  return static_cast<double>(T(abs(value) / scale));
}

std::vector<double> heun_operator_image(int l, double lambda, double mu, const std::vector<double>& a) {
  // z²E'' + ((1-l)z + μ - μz²)E' + (λ + μ(l-1)z)E
  const std::size_t n = a.size();
  std::vector<double> e1(n, 0.0), e2(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) e1[k - 1] = static_cast<double>(k) * a[k];
  for (std::size_t k = 2; k < n; ++k) e2[k - 2] = static_cast<double>(k * (k - 1)) * a[k];
  const std::vector<double> p2{0.0, 0.0, 1.0};
  const std::vector<double> p1{mu, 1.0 - l, -mu};
  const std::vector<double> p0{lambda, mu * (l - 1)};
  std::vector<double> out(std::max<std::size_t>(n + 2, static_cast<std::size_t>(l) + 2), 0.0);
  auto accumulate = [&](const std::vector<double>& p, const std::vector<double>& e) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t k = 0; k < e.size(); ++k)
        if (i + k < out.size()) out[i + k] += p[i] * e[k];
  };
  accumulate(p2, e2);
  accumulate(p1, e1);
  accumulate(p0, a);
  return out;
}

PolynomialSolution polynomial_solution(int l, double lambda, double mu) {
  if (mu == 0.0) throw std::invalid_argument("polynomial_solution: requires mu != 0");
  const SpectralCurve curve = spectral_polynomial(l);
  if (curve_residual(curve, lambda, mu) > kCurveGate)
    throw std::invalid_argument("polynomial_solution: lambda is not on the spectral curve");

  // With μ != 0 the superdiagonal μj never vanishes, so rank(H+λ) >= l-1 and
  // the kernel is at most one-dimensional.
  const NumericTridiag h = build_h_numeric(l, mu);
  double norm = 0.0;
  for (int i = 0; i < l; ++i) {
    double row = abs(h.diag[i] + lambda);
    if (i > 0) row += abs(h.sub[i - 1]);
    if (i + 1 < l) row += abs(h.sup[i]);
    norm = std::max(norm, row);
  }
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);

  auto apply = [&](const std::vector<double>& x) {
    std::vector<double> y(l);
    for (int i = 0; i < l; ++i) {
      y[i] = (h.diag[i] + lambda) * x[i];
      if (i > 0) y[i] += h.sub[i - 1] * x[i - 1];
      if (i + 1 < l) y[i] += h.sup[i] * x[i + 1];
    }
    return y;
  };
  auto normalize = [](std::vector<double>& x) {
    const auto it = std::max_element(x.begin(), x.end(), [](double p, double q) { return abs(p) < abs(q); });
    const double s = *it;
    for (auto& v : x) v /= s;
  };

  std::vector<double> x(l, 1.0);
  double rel = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 5; ++it) {
    x = solve_tridiag(h, lambda, x, tiny);
    normalize(x);
    double r = 0.0;
    for (double v : apply(x)) r = std::max(r, abs(v));
    rel = r / std::max(norm, 1.0);
    if (rel < 1e-14) break;
  }
  if (!(rel < 1e-8)) throw std::runtime_error("polynomial_solution: inverse iteration did not find a kernel vector");

  PolynomialSolution sol;
  sol.coeffs = x;
  for (double c : heun_operator_image(l, lambda, mu, x)) sol.residual = std::max(sol.residual, abs(c));
  return sol;
}

}  // namespace heun::spectral
