#ifndef HEUN_IO_SVG_HPP
#define HEUN_IO_SVG_HPP

#include <string>

#include "heun/dynamics/portrait.hpp"

namespace heun::io {

// Heat map of a portrait: A grows upward, B to the right. Cells with integer
// ρ take a saturated palette color indexed by ρ mod 12; the rest are a pale
// blend of the two neighbouring integer colors.
std::string portrait_svg(const dynamics::Portrait& p, int cell_px = 3);

}  // namespace heun::io

#endif  // HEUN_IO_SVG_HPP
