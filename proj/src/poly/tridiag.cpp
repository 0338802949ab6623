#include "heun/poly/tridiag.hpp"

#include <stdexcept>

namespace heun::poly {

void TridiagSpec::validate() const {
  if (diag.size() != n) throw std::invalid_argument("TridiagSpec: diag length != n");
  const std::size_t off = n == 0 ? 0 : n - 1;
  if (sub.size() != off || sup.size() != off)
    throw std::invalid_argument("TridiagSpec: off-diagonal length != n-1");
  for (const auto* list : {&diag, &sub, &sup})
    for (const auto& p : *list)
      if (p.vars() != diag.front().vars()) throw std::invalid_argument("TridiagSpec: mixed variable labels");
}

BivarPoly tridiag_det(const TridiagSpec& spec, const VarNames& vars) {
  spec.validate();
  BivarPoly prev2 = BivarPoly::constant(1, vars);
  if (spec.n == 0) return prev2;
  if (spec.diag.front().vars() != vars) throw std::invalid_argument("tridiag_det: labels differ from entries");
  BivarPoly prev1 = spec.diag[0];
  for (std::size_t k = 1; k < spec.n; ++k) {
    BivarPoly next = spec.diag[k] * prev1 - spec.sub[k - 1] * spec.sup[k - 1] * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

BivarPoly dense_det(std::vector<std::vector<BivarPoly>> m, const VarNames& vars) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("dense_det: matrix is not square");
  if (n == 0) return BivarPoly::constant(1, vars);
  int sign = 1;
  BivarPoly prev_pivot = BivarPoly::constant(1, vars);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return BivarPoly(vars);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev_pivot);
    prev_pivot = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace heun::poly
