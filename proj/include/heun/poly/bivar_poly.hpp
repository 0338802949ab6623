#ifndef HEUN_POLY_BIVAR_POLY_HPP
#define HEUN_POLY_BIVAR_POLY_HPP

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace heun::poly {

using Integer = mpz_class;

// Symbolic labels of the two positional variables, e.g. {"λ", "v"}.
using VarNames = std::array<std::string, 2>;

struct Exponent {
  unsigned first = 0;
  unsigned second = 0;

  unsigned total() const { return first + second; }
  auto operator<=>(const Exponent&) const = default;
};

// Sparse polynomial in two variables with arbitrary-precision integer
// coefficients. Zero coefficients are never stored. Arithmetic between
// polynomials requires identical variable labels.
class BivarPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  BivarPoly() : vars_{"x", "y"} {}
  explicit BivarPoly(VarNames vars) : vars_(std::move(vars)) {}
  BivarPoly(VarNames vars, Terms terms);

  static BivarPoly constant(const Integer& c, const VarNames& vars);
  static BivarPoly monomial(const Integer& c, unsigned a, unsigned b, const VarNames& vars);
  // The variable in slot `which` (0 or 1) as a polynomial.
  static BivarPoly variable(int which, const VarNames& vars);

  const Terms& terms() const { return terms_; }
  const VarNames& vars() const { return vars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Integer coeff(unsigned a, unsigned b) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree(int which) const;
  // Smallest total degree of a stored term; -1 for zero.
  int lowest_degree() const;

  // Slot of a label, or -1.
  int index_of(std::string_view label) const;
  // Slot of a label; throws std::invalid_argument for unknown labels.
  int require_index(std::string_view label) const;

  BivarPoly relabel(const VarNames& vars) const;
  BivarPoly homogeneous_part(unsigned degree) const;
  BivarPoly derivative(int which) const;
  BivarPoly swapped() const;
  BivarPoly pow(unsigned k) const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Integer& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Integer& c) { return a *= c; }
  friend BivarPoly operator*(const Integer& c, BivarPoly a) { return a *= c; }
  BivarPoly operator-() const;

  // Equality compares labels and terms.
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Exact evaluation at integer points.
  Integer evaluate(const Integer& x, const Integer& y) const;

  // Floating (or multiprecision / complex) evaluation. Coefficients are
  // converted through their decimal string when T is not a builtin.
  template <class T>
  T evaluate_as(const T& x, const T& y) const;

  // Canonical text form: `c*x^a*y^b` terms joined by " + ", sorted by
  // (total degree, first exponent) descending. Zero prints as "0".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Integer& c);
  void check_compatible(const BivarPoly& rhs) const;

  VarNames vars_;
  Terms terms_;
};

// Exact quotient a / b; throws std::domain_error when b does not divide a.
BivarPoly exact_divide(const BivarPoly& a, const BivarPoly& b);

// Replace the variable labelled `which` by `replacement`. The result lives in
// the replacement's alphabet; the kept variable of `p` must appear there
// (unless `p` does not depend on it).
BivarPoly substitute(const BivarPoly& p, std::string_view which, const BivarPoly& replacement);

template <class T>
T coefficient_as(const Integer& c);

template <class T>
T BivarPoly::evaluate_as(const T& x, const T& y) const {
  const int dx = degree(0), dy = degree(1);
  if (dx < 0) return T(0);
  std::vector<T> xp{T(1)}, yp{T(1)};
  for (int k = 0; k < dx; ++k) xp.push_back(xp.back() * x);
  for (int k = 0; k < dy; ++k) yp.push_back(yp.back() * y);
  T acc = T(0);
  for (const auto& [e, c] : terms_) acc = acc + coefficient_as<T>(c) * xp[e.first] * yp[e.second];
  return acc;
}

template <class T>
T coefficient_as(const Integer& c) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(c.get_d());
  } else if constexpr (requires { typename T::real_type; }) {
    return T(coefficient_as<typename T::real_type>(c));
  } else {
    return T(c.get_str());
  }
}

}  // namespace heun::poly

#endif  // HEUN_POLY_BIVAR_POLY_HPP
