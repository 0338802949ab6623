#ifndef HEUN_TESTS_ORACLES_HPP
#define HEUN_TESTS_ORACLES_HPP

#include <vector>

#include "heun/poly/bivar_poly.hpp"

// Slow, obviously-correct reference implementations used only by tests.
namespace oracle {

using heun::poly::BivarPoly;
using heun::poly::VarNames;
using Matrix = std::vector<std::vector<BivarPoly>>;

// Laplace expansion along the first row.
BivarPoly cofactor_det(const Matrix& m, const VarNames& vars);

// Determinant of the Sylvester matrix of p and q in the slot `which`.
BivarPoly sylvester_resultant(const BivarPoly& p, const BivarPoly& q, int which);

// Coefficients of p as a polynomial in slot `which`, low degree first.
std::vector<BivarPoly> coefficients_in(const BivarPoly& p, int which);

}  // namespace oracle

#endif
