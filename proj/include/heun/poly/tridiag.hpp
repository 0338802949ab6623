#ifndef HEUN_POLY_TRIDIAG_HPP
#define HEUN_POLY_TRIDIAG_HPP

#include <vector>

#include "heun/poly/bivar_poly.hpp"

namespace heun::poly {

// Symbolic tridiagonal matrix: diag[k] = M(k,k), sub[k] = M(k+1,k),
// sup[k] = M(k,k+1).
struct TridiagSpec {
  std::size_t n = 0;
  std::vector<BivarPoly> diag;
  std::vector<BivarPoly> sub;
  std::vector<BivarPoly> sup;

  // Throws std::invalid_argument on inconsistent lengths or mixed labels.
  void validate() const;
};

// Exact determinant by the three-term recurrence
//   D_k = diag_k D_{k-1} - sub_{k-1} sup_{k-1} D_{k-2}.
// The empty matrix has determinant 1 in the labels `vars`.
BivarPoly tridiag_det(const TridiagSpec& spec, const VarNames& vars);

// Determinant of a dense square matrix of polynomials (fraction-free
// Bareiss elimination with exact division).
BivarPoly dense_det(std::vector<std::vector<BivarPoly>> m, const VarNames& vars);

}  // namespace heun::poly

#endif  // HEUN_POLY_TRIDIAG_HPP
