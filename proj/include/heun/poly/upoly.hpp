#ifndef HEUN_POLY_UPOLY_HPP
#define HEUN_POLY_UPOLY_HPP

#include <string>
#include <vector>

#include "heun/poly/bivar_poly.hpp"

namespace heun::poly {

// Dense univariate polynomial over the integers; coeffs()[k] multiplies x^k.
// The representation is trimmed: no trailing zeros, the zero polynomial is
// the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  static UPoly constant(const Integer& c);
  static UPoly monomial(const Integer& c, unsigned k);

  const std::vector<Integer>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& lead() const { return c_.back(); }
  Integer operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  UPoly& operator*=(const Integer& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Integer& c) { return a *= c; }
  UPoly operator-() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly shifted(unsigned k) const;  // multiply by x^k
  UPoly derivative() const;
  Integer content() const;          // positive gcd of coefficients (0 for zero)
  UPoly primitive_part() const;     // sign normalised: positive leading coefficient
  Integer evaluate(const Integer& x) const;

  template <class T>
  T evaluate_as(const T& x) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + coefficient_as<T>(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

UPoly pow(const UPoly& p, unsigned k);

// Exact quotient; throws std::domain_error if b does not divide a over Z.
UPoly exact_divide(const UPoly& a, const UPoly& b);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);

// Gcd over Z[x], normalised to positive leading coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);

// Number of distinct real roots in the open interval (0, +inf), exact.
int count_positive_roots(const UPoly& p);

// Conversions with BivarPoly: the univariate polynomial lives in slot `which`.
UPoly to_upoly(const BivarPoly& p, int which);
BivarPoly to_bivar(const UPoly& p, int which, const VarNames& vars);

}  // namespace heun::poly

#endif  // HEUN_POLY_UPOLY_HPP
