#include "heun/io/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace heun::io {

namespace {

struct Rgb {
  int r, g, b;
};

constexpr std::array<Rgb, 12> kPalette{{{31, 119, 180},
                                        {214, 39, 40},
                                        {44, 160, 44},
                                        {255, 127, 14},
                                        {148, 103, 189},
                                        {23, 190, 207},
                                        {140, 86, 75},
                                        {227, 119, 194},
                                        {188, 189, 34},
                                        {57, 59, 121},
                                        {127, 127, 127},
                                        {0, 0, 0}}};

const Rgb& palette(long k) { return kPalette[((k % 12) + 12) % 12]; }

Rgb cell_color(double rho) {
  const double n = std::round(rho);
  if (std::abs(rho - n) < 1e-9) return palette(static_cast<long>(n));
  const double fl = std::floor(rho), t = rho - fl;
  const Rgb &a = palette(static_cast<long>(fl)), &b = palette(static_cast<long>(fl) + 1);
  auto mix = [&](int x, int y) {
    const double v = (1 - t) * x + t * y;
    return static_cast<int>(std::lround(0.35 * v + 0.65 * 255));
  };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

}  // namespace

std::string portrait_svg(const dynamics::Portrait& p, int cell_px) {
  const int nx = p.spec.nx, ny = p.spec.ny;
  const int w = nx * cell_px, h = ny * cell_px;
  std::string s;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\" "
                "shape-rendering=\"crispEdges\">\n",
                w, h, w, h);
  s += buf;
  for (int iy = 0; iy < ny; ++iy) {
    const int y = (ny - 1 - iy) * cell_px;
    int ix = 0;
    while (ix < nx) {
      const Rgb c = cell_color(p.at(ix, iy));
      int run = 1;
      while (ix + run < nx) {
        const Rgb d = cell_color(p.at(ix + run, iy));
        if (d.r != c.r || d.g != c.g || d.b != c.b) break;
        ++run;
      }
      std::snprintf(buf, sizeof buf, "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"#%02x%02x%02x\"/>\n",
                    ix * cell_px, y, run * cell_px, cell_px, c.r, c.g, c.b);
      s += buf;
      ix += run;
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace heun::io
