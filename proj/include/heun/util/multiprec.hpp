#ifndef HEUN_UTIL_MULTIPREC_HPP
#define HEUN_UTIL_MULTIPREC_HPP

#include <cmath>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace heun::util {

namespace mp = boost::multiprecision;

// Fixed-precision MPFR real with `Digits` decimal digits.
template <unsigned Digits>
using Mpfr = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

using Mpfr128 = Mpfr<39>;  // ~130-bit mantissa
using Mpfr256 = Mpfr<78>;  // ~260-bit mantissa

// Minimal complex number over an arbitrary real type (std::complex is only
// specified for the builtin floating types).
template <class T>
struct Cplx {
  using real_type = T;
  T re{0};
  T im{0};

  Cplx() = default;
  Cplx(T r) : re(std::move(r)) {}
  Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
  friend Cplx operator-(Cplx a, const Cplx& b) { return a -= b; }
  friend Cplx operator-(const Cplx& a) { return Cplx(-a.re, -a.im); }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    const T d = b.re * b.re + b.im * b.im;
    return Cplx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
};

template <class T>
T norm(const Cplx<T>& z) {
  using std::sqrt;
  using mp::sqrt;
  return sqrt(z.re * z.re + z.im * z.im);
}

template <class T>
bool is_zero(const Cplx<T>& z) {
  return z.re == 0 && z.im == 0;
}

// Simultaneous Aberth-Ehrlich iteration for all roots of
// Σ c[k] z^k (c.back() != 0). Returns false if the corrections did not fall
// below rel_tol within max_iter sweeps.
template <class T>
bool aberth_roots(const std::vector<Cplx<T>>& c, std::vector<Cplx<T>>& roots, const T& rel_tol, int max_iter = 500) {
  const int n = static_cast<int>(c.size()) - 1;
  roots.clear();
  if (n < 1) return true;

  // Fujiwara bound for the starting circle.
  const T lead = norm(c[n]);
  T radius = 0;
  for (int k = 1; k <= n; ++k) {
    const T ratio = norm(c[n - k]) / lead;
    if (ratio == 0) continue;
    T b = mp::pow(ratio, T(1) / T(k));
    if (k == n) b = mp::pow(ratio / 2, T(1) / T(k));
    if (b > radius) radius = b;
  }
  radius *= 2;
  if (radius == 0) radius = 1;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * 3.14159265358979323846 * k / n + 0.4;
    roots.emplace_back(radius * T(std::cos(angle)), radius * T(std::sin(angle)));
  }

  for (int it = 0; it < max_iter; ++it) {
    bool done = true;
    for (int k = 0; k < n; ++k) {
      const Cplx<T>& z = roots[k];
      Cplx<T> p = c[n], dp = Cplx<T>();
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + c[i];
      }
      if (is_zero(p)) continue;
      const Cplx<T> ratio = p / dp;
      Cplx<T> sum;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += Cplx<T>(T(1)) / (z - roots[j]);
      const Cplx<T> w = ratio / (Cplx<T>(T(1)) - ratio * sum);
      roots[k] -= w;
      const T scale = norm(roots[k]) > 1 ? norm(roots[k]) : T(1);
      if (norm(w) > rel_tol * scale) done = false;
    }
    if (done) return true;
  }
  return false;
}

}  // namespace heun::util

#endif  // HEUN_UTIL_MULTIPREC_HPP
