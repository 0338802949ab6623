#ifndef HEUN_POLY_NEWTON_DIAGRAM_HPP
#define HEUN_POLY_NEWTON_DIAGRAM_HPP

#include <vector>

#include "heun/poly/bivar_poly.hpp"

namespace heun::poly {

// Newton diagram at the origin: the compact faces of the convex hull of
// supp(p) + R_{>=0}^2.
struct NewtonDiagram {
  std::vector<Exponent> points;      // support, sorted
  std::vector<Exponent> lower_hull;  // vertices, ascending first coordinate

  // True iff the diagram is exactly one edge with endpoints a and b.
  bool is_single_edge(const Exponent& a, const Exponent& b) const;
};

// Throws std::invalid_argument for the zero polynomial.
NewtonDiagram newton_lower_hull(const BivarPoly& p);

}  // namespace heun::poly

#endif  // HEUN_POLY_NEWTON_DIAGRAM_HPP
