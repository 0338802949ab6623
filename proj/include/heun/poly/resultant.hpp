#ifndef HEUN_POLY_RESULTANT_HPP
#define HEUN_POLY_RESULTANT_HPP

#include <string_view>

#include "heun/poly/bivar_poly.hpp"
#include "heun/poly/upoly.hpp"

namespace heun::poly {

// Resultant with respect to the variable labelled `eliminate`, computed by
// the subresultant polynomial remainder sequence over Z[other]. The result
// is a polynomial in the surviving variable only (same labels as the
// inputs). Sign convention: the Sylvester determinant of (p, q).
// Throws std::invalid_argument when either input is zero or both are
// constant, or when the labels differ.
BivarPoly resultant(const BivarPoly& p, const BivarPoly& q, std::string_view eliminate);

// Univariate subresultant resultant over Z.
Integer resultant(const UPoly& p, const UPoly& q);

}  // namespace heun::poly

#endif  // HEUN_POLY_RESULTANT_HPP
