#include <cmath>
#include <stdexcept>

#include "heun/spectral/spectral.hpp"

namespace heun::spectral {

int s_of_j(int l, int j) {
  if (j < 1 || j > l) throw std::invalid_argument("s_of_j: j out of range");
  return j % 2 == 1 ? l - j + 1 : l - j;
}

std::vector<SimpleIntersectionPoint> simple_intersections(int l, double mu, double tol) {
  if (!(mu > 0.0)) throw std::invalid_argument("simple_intersections: requires mu > 0");
  const std::vector<double> R = shifted_roots(l, mu, tol);
  std::vector<SimpleIntersectionPoint> out;
  for (int j = 1; j <= l; ++j) {
    SimpleIntersectionPoint p;
    p.j = j;
    p.mu = mu;
    p.R_j = R[j - 1];
    p.lambda_j = p.R_j - mu * mu;
    if (!(p.R_j > 0.0))
      throw std::runtime_error("simple_intersections: R_j <= 0 for j = " + std::to_string(j) +
                               ", contradicting positivity of R_j");
    p.omega_j = 1.0 / (2.0 * std::sqrt(p.R_j));
    p.B = l * p.omega_j;
    p.A = 2.0 * mu * p.omega_j;
    p.s = s_of_j(l, j);
    out.push_back(p);
  }
  return out;
}

}  // namespace heun::spectral
