#include "heun/poly/resultant.hpp"

#include <stdexcept>
#include <vector>

namespace heun::poly {

namespace {

// Coefficient-ring helpers so the subresultant loop below serves both Z and Z[y].
bool ring_is_zero(const Integer& a) { return a == 0; }
bool ring_is_zero(const UPoly& a) { return a.is_zero(); }
Integer ring_one(const Integer&) { return 1; }
UPoly ring_one(const UPoly&) { return UPoly::constant(1); }

Integer ring_exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("subresultant: inexact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
UPoly ring_exact_div(const UPoly& a, const UPoly& b) { return exact_divide(a, b); }

template <class R>
R ring_pow(const R& a, unsigned k) {
  R result = ring_one(a);
  R base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

// Dense polynomial over R in the eliminated variable.
template <class R>
struct RPoly {
  std::vector<R> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  const R& lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
  }
};

template <class R>
RPoly<R> prem(const RPoly<R>& a, const RPoly<R>& b) {
  std::vector<R> r = a.c;
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const R top = r[k];
    for (auto& v : r) v = v * b.lead();
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - top * b.c[j];
  }
  RPoly<R> out{std::vector<R>(r.begin(), r.begin() + db)};
  out.trim();
  return out;
}

// Cohen, "A Course in Computational Algebraic Number Theory", Alg. 3.3.7,
// without the content extraction step.
template <class R>
R subresultant(RPoly<R> a, RPoly<R> b) {
  if (a.c.empty() || b.c.empty()) return R{};
  const R one = ring_one(a.c.front());
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
  }
  if (b.degree() == 0) return sign > 0 ? ring_pow(b.lead(), a.degree()) : R{} - ring_pow(b.lead(), a.degree());
  R g = one, h = one;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    RPoly<R> r = prem(a, b);
    a = std::move(b);
    if (r.c.empty()) return R{};
    const R div = g * ring_pow(h, static_cast<unsigned>(delta));
    for (auto& v : r.c) v = ring_exact_div(v, div);
    b = std::move(r);
    g = a.lead();
    // h <- h^(1-delta) g^delta
    if (delta == 0) {
      // h unchanged
    } else {
      h = ring_exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
    if (b.degree() > 0) continue;
    const int da = a.degree();
    R res = ring_exact_div(ring_pow(b.lead(), static_cast<unsigned>(da)),
                           ring_pow(h, static_cast<unsigned>(da - 1)));
    return sign > 0 ? res : R{} - res;
  }
}

}  // namespace

Integer resultant(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) throw std::invalid_argument("resultant: both inputs constant");
  return subresultant(RPoly<Integer>{p.coeffs()}, RPoly<Integer>{q.coeffs()});
}

BivarPoly resultant(const BivarPoly& p, const BivarPoly& q, std::string_view eliminate) {
  if (p.vars() != q.vars()) throw std::invalid_argument("resultant: variable labels differ");
  const int e = p.require_index(eliminate);
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  if (p.degree(e) <= 0 && q.degree(e) <= 0)
    throw std::invalid_argument("resultant: both inputs are constant in the eliminated variable");
  const int keep = 1 - e;
  auto split = [&](const BivarPoly& f) {
    RPoly<UPoly> out;
    std::vector<std::vector<Integer>> rows(f.degree(e) + 1);
    for (const auto& [ex, c] : f.terms()) {
      const unsigned de = e == 0 ? ex.first : ex.second;
      const unsigned dk = keep == 0 ? ex.first : ex.second;
      auto& row = rows[de];
      if (row.size() <= dk) row.resize(dk + 1, Integer(0));
      row[dk] = c;
    }
    for (auto& row : rows) out.c.emplace_back(std::move(row));
    out.trim();
    return out;
  };
  const UPoly r = subresultant(split(p), split(q));
  return to_bivar(r, keep, p.vars());
}

}  // namespace heun::poly
