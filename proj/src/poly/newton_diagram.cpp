#include "heun/poly/newton_diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace heun::poly {

namespace {

long long cross(const Exponent& o, const Exponent& a, const Exponent& b) {
  const long long ax = static_cast<long long>(a.first) - o.first, ay = static_cast<long long>(a.second) - o.second;
  const long long bx = static_cast<long long>(b.first) - o.first, by = static_cast<long long>(b.second) - o.second;
  return ax * by - ay * bx;
}

}  // namespace

bool NewtonDiagram::is_single_edge(const Exponent& a, const Exponent& b) const {
  if (lower_hull.size() != 2) return false;
  return (lower_hull[0] == a && lower_hull[1] == b) || (lower_hull[0] == b && lower_hull[1] == a);
}

NewtonDiagram newton_lower_hull(const BivarPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("newton_lower_hull: zero polynomial");
  NewtonDiagram d;
  for (const auto& [e, c] : p.terms()) d.points.push_back(e);
  std::sort(d.points.begin(), d.points.end());

  // For each first coordinate only the lowest point can be on the diagram.
  std::vector<Exponent> candidates;
  for (const auto& e : d.points)
    if (candidates.empty() || candidates.back().first != e.first) candidates.push_back(e);

  // Lower convex chain (Andrew's monotone chain), strictly convex.
  std::vector<Exponent> chain;
  for (const auto& e : candidates) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), e) <= 0) chain.pop_back();
    chain.push_back(e);
  }
  // Keep the strictly decreasing part: the compact faces end at the first
  // vertex of minimal height.
  std::size_t end = 0;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k].second < chain[end].second) end = k;
    else break;
  }
  d.lower_hull.assign(chain.begin(), chain.begin() + static_cast<long>(end) + 1);
  return d;
}

}  // namespace heun::poly
