#include "heun/poly/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace heun::poly {

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Integer& c) { return UPoly(std::vector<Integer>{c}); }

UPoly UPoly::monomial(const Integer& c, unsigned k) {
  std::vector<Integer> v(k + 1, Integer(0));
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Integer(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Integer(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Integer& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& v : p.c_) v = -v;
  return p;
}

UPoly UPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(v));
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lead() < 0) g = -g;
  UPoly p = *this;
  for (auto& v : p.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return p;
}

Integer UPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << c_[k].get_str();
    if (k > 0) out << '*' << var << '^' << k;
  }
  return out.str();
}

UPoly pow(const UPoly& p, unsigned k) {
  UPoly result = UPoly::constant(1);
  UPoly base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

UPoly exact_divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_divide: divisor does not divide dividend");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1, Integer(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw std::domain_error("exact_divide: non-integral quotient coefficient");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("exact_divide: nonzero remainder");
  return UPoly(std::move(q));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Integer top = r[k];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[k - db + j].get_mpz_t(), top.get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  return UPoly(std::vector<Integer>(r.begin(), r.begin() + db));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  UPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * c;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  const UPoly g = gcd(p, p.derivative());
  return exact_divide(p.primitive_part(), g.primitive_part());
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_positive_roots(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  UPoly q = p;
  // Roots at zero are excluded from (0, inf).
  while (q[0] == 0) q = UPoly(std::vector<Integer>(q.coeffs().begin() + 1, q.coeffs().end()));
  if (q.degree() <= 0) return 0;
  auto positive_scaled = [](const UPoly& u) {
    const Integer c = u.content();
    std::vector<Integer> v = u.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return UPoly(std::move(v));
  };
  std::vector<UPoly> chain{positive_scaled(q), positive_scaled(q.derivative())};
  while (chain.back().degree() > 0) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    // Positive multiplier keeps the Sturm signs: |lc(b)|^k a = q b + r.
    UPoly r = pseudo_remainder(a, b);
    if (b.lead() < 0 && (a.degree() - b.degree() + 1) % 2 == 1) r = -r;
    if (r.is_zero()) break;
    chain.push_back(positive_scaled(-r));
  }
  std::vector<int> at_zero, at_inf;
  for (const auto& s : chain) {
    at_zero.push_back(sgn(s[0]));
    at_inf.push_back(sgn(s.lead()));
  }
  return sign_changes(at_zero) - sign_changes(at_inf);
}

UPoly to_upoly(const BivarPoly& p, int which) {
  if (p.degree(1 - which) > 0) throw std::invalid_argument("to_upoly: polynomial depends on both variables");
  std::vector<Integer> v(std::max(p.degree(which) + 1, 0), Integer(0));
  for (const auto& [e, c] : p.terms()) v[which == 0 ? e.first : e.second] = c;
  return UPoly(std::move(v));
}

BivarPoly to_bivar(const UPoly& p, int which, const VarNames& vars) {
  BivarPoly out(vars);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] == 0) continue;
    out += which == 0 ? BivarPoly::monomial(p[k], k, 0, vars) : BivarPoly::monomial(p[k], 0, k, vars);
  }
  return out;
}

}  // namespace heun::poly
