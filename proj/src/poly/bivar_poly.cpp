#include "heun/poly/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace heun::poly {

BivarPoly::BivarPoly(VarNames vars, Terms terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms)
    if (c != 0) terms_.emplace(e, std::move(c));
}

BivarPoly BivarPoly::constant(const Integer& c, const VarNames& vars) {
  return monomial(c, 0, 0, vars);
}

BivarPoly BivarPoly::monomial(const Integer& c, unsigned a, unsigned b, const VarNames& vars) {
  BivarPoly p(vars);
  if (c != 0) p.terms_.emplace(Exponent{a, b}, c);
  return p;
}

BivarPoly BivarPoly::variable(int which, const VarNames& vars) {
  if (which != 0 && which != 1) throw std::invalid_argument("variable slot must be 0 or 1");
  return which == 0 ? monomial(1, 1, 0, vars) : monomial(1, 0, 1, vars);
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Integer BivarPoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find(Exponent{a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.total()));
  return d;
}

int BivarPoly::degree(int which) const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(which == 0 ? e.first : e.second));
  return d;
}

int BivarPoly::lowest_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = terms_.begin()->first.total();
  for (const auto& [e, c] : terms_) d = std::min(d, e.total());
  return static_cast<int>(d);
}

int BivarPoly::index_of(std::string_view label) const {
  if (vars_[0] == label) return 0;
  if (vars_[1] == label) return 1;
  return -1;
}

int BivarPoly::require_index(std::string_view label) const {
  const int i = index_of(label);
  if (i < 0)
    throw std::invalid_argument("unknown variable label '" + std::string(label) + "' (have '" +
                                vars_[0] + "', '" + vars_[1] + "')");
  return i;
}

BivarPoly BivarPoly::relabel(const VarNames& vars) const {
  BivarPoly p = *this;
  p.vars_ = vars;
  return p;
}

BivarPoly BivarPoly::homogeneous_part(unsigned degree) const {
  BivarPoly p(vars_);
  for (const auto& [e, c] : terms_)
    if (e.total() == degree) p.terms_.emplace(e, c);
  return p;
}

BivarPoly BivarPoly::derivative(int which) const {
  BivarPoly p(vars_);
  for (const auto& [e, c] : terms_) {
    const unsigned k = which == 0 ? e.first : e.second;
    if (k == 0) continue;
    Exponent d = e;
    (which == 0 ? d.first : d.second) -= 1;
    p.terms_.emplace(d, c * k);
  }
  return p;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly p(VarNames{vars_[1], vars_[0]});
  for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.second, e.first}, c);
  return p;
}

BivarPoly BivarPoly::pow(unsigned k) const {
  BivarPoly result = constant(1, vars_);
  BivarPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

void BivarPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BivarPoly::check_compatible(const BivarPoly& rhs) const {
  if (vars_ != rhs.vars_)
    throw std::invalid_argument("variable labels differ: (" + vars_[0] + "," + vars_[1] + ") vs (" +
                                rhs.vars_[0] + "," + rhs.vars_[1] + ")");
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  a.check_compatible(b);
  BivarPoly p(a.vars_);
  Integer prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      p.add_term(Exponent{ea.first + eb.first, ea.second + eb.second}, prod);
    }
  return p;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

Integer BivarPoly::evaluate(const Integer& x, const Integer& y) const {
  Integer acc = 0, xp, yp;
  for (const auto& [e, c] : terms_) {
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e.first);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), e.second);
    acc += c * xp * yp;
  }
  return acc;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, const Integer*>> order;
  order.reserve(terms_.size());
  for (const auto& [e, c] : terms_) order.emplace_back(e, &c);
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    if (l.first.total() != r.first.total()) return l.first.total() > r.first.total();
    return l.first.first > r.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : order) {
    if (!first) out << " + ";
    first = false;
    out << c->get_str();
    if (e.first > 0) out << '*' << vars_[0] << '^' << e.first;
    if (e.second > 0) out << '*' << vars_[1] << '^' << e.second;
  }
  return out.str();
}

namespace {

// Lex order with the first variable dominant.
Exponent leading_exponent(const BivarPoly& p) {
  Exponent best = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    if (e.first > best.first || (e.first == best.first && e.second > best.second)) best = e;
  return best;
}

}  // namespace

BivarPoly exact_divide(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (a.vars() != b.vars()) throw std::invalid_argument("exact_divide: variable labels differ");
  BivarPoly rem = a;
  BivarPoly quot(a.vars());
  const Exponent lb = leading_exponent(b);
  const Integer cb = b.coeff(lb.first, lb.second);
  while (!rem.is_zero()) {
    const Exponent lr = leading_exponent(rem);
    if (lr.first < lb.first || lr.second < lb.second)
      throw std::domain_error("exact_divide: divisor does not divide dividend");
    const Integer cr = rem.coeff(lr.first, lr.second);
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t()))
      throw std::domain_error("exact_divide: non-integral quotient coefficient");
    Integer q;
    mpz_divexact(q.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
    const BivarPoly step = BivarPoly::monomial(q, lr.first - lb.first, lr.second - lb.second, a.vars());
    quot += step;
    rem -= step * b;
  }
  return quot;
}

BivarPoly substitute(const BivarPoly& p, std::string_view which, const BivarPoly& replacement) {
  const int w = p.require_index(which);
  const int kept = 1 - w;
  const VarNames& out_vars = replacement.vars();
  const int kept_slot = replacement.index_of(p.vars()[kept]);
  if (kept_slot < 0 && p.degree(kept) > 0)
    throw std::invalid_argument("substitute: kept variable '" + p.vars()[kept] +
                                "' is not in the replacement's alphabet");

  std::vector<BivarPoly> powers{BivarPoly::constant(1, out_vars)};
  const int max_power = std::max(p.degree(w), 0);
  for (int k = 1; k <= max_power; ++k) powers.push_back(powers.back() * replacement);

  BivarPoly out(out_vars);
  for (const auto& [e, c] : p.terms()) {
    const unsigned kw = w == 0 ? e.first : e.second;
    const unsigned kk = kept == 0 ? e.first : e.second;
    BivarPoly term = powers[kw] * c;
    if (kk > 0) {
      const BivarPoly x = kept_slot == 0 ? BivarPoly::monomial(1, kk, 0, out_vars)
                                         : BivarPoly::monomial(1, 0, kk, out_vars);
      term *= x;
    }
    out += term;
  }
  return out;
}

}  // namespace heun::poly
