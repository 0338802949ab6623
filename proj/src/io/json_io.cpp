#include "heun/io/json_io.hpp"

namespace heun::io {

Json to_json(const spectral::EigenSpectrum& e) {
  return Json{{"mu", e.mu}, {"values", e.values}, {"min_gap", e.min_gap}, {"digits", e.digits}};
}

Json to_json(const spectral::SimpleIntersectionPoint& p) {
  return Json{{"j", p.j},     {"mu", p.mu}, {"lambda_j", p.lambda_j}, {"R_j", p.R_j},
              {"omega_j", p.omega_j}, {"B", p.B},   {"A", p.A},               {"s", p.s}};
}

Json to_json(const spectral::CertificateReport& c) {
  return Json{{"l", c.l},
              {"lambda_power_present", c.lambda_power_present},
              {"r_linear_present", c.r_linear_present},
              {"no_lower_pure_powers", c.no_lower_pure_powers},
              {"single_edge", c.single_edge},
              {"matrix_route_agrees", c.matrix_route_agrees},
              {"lambda_coeff", c.lambda_coeff.get_str()},
              {"r_coeff", c.r_coeff.get_str()},
              {"pass", c.pass()}};
}

Json to_json(const xi::GenusReport& g) {
  return Json{{"l", g.l},
              {"conjectured_genus", g.conjectured_genus},
              {"bidegree", {g.bidegree.first, g.bidegree.second}},
              {"bound_consistent", g.bound_consistent},
              {"certified", g.certified},
              {"certificate_notes", g.certificate_notes}};
}

Json to_json(const xi::SmoothnessCertificate& c) {
  Json smooth = nullptr;
  if (c.smooth) smooth = *c.smooth;
  return Json{{"l", c.l},
              {"sign", xi::to_string(c.sign)},
              {"gcd_poly", c.gcd_poly.to_string()},
              {"smooth", smooth},
              {"candidates_checked", c.candidates_checked},
              {"precision_bits", c.precision_bits},
              {"notes", c.notes}};
}

Json to_json(const dynamics::RotationNumberResult& r) {
  return Json{{"rho", r.rho}, {"periods_used", r.periods_used}, {"error_estimate", r.error_estimate}, {"locked", r.locked}};
}

Json to_json(const dynamics::MobiusMonodromy& m) {
  return Json{{"m", {{m.m[0][0], m.m[0][1]}, {m.m[1][0], m.m[1][1]}}},
              {"trace", m.trace},
              {"class", dynamics::to_string(m.cls)},
              {"identity_distance", m.identity_distance}};
}

Json to_json(const dynamics::BoundaryPoint& b) {
  return Json{{"s", b.s}, {"sign", dynamics::to_string(b.sign)}, {"A", b.A}, {"omega", b.omega}, {"B", b.B},
              {"residual", b.residual}};
}

Json to_json(const dynamics::Constriction& c) {
  return Json{{"s", c.s},
              {"omega", c.omega},
              {"B", c.B},
              {"A", c.A},
              {"identity_distance", c.identity_distance},
              {"trace", c.trace},
              {"return_error", c.return_error},
              {"rho", c.rho}};
}

Json to_json(const crosscheck::PointRecord& p) {
  return Json{{"j", p.j},
              {"mu", p.mu},
              {"omega", p.omega},
              {"B", p.B},
              {"A", p.A},
              {"s_predicted", p.s_predicted},
              {"s_measured", p.s_measured},
              {"sign_measured", std::string(1, p.sign_measured)},
              {"residual_plus", p.residual_plus},
              {"residual_minus", p.residual_minus},
              {"max_residual", p.max_residual},
              {"identity_monodromy", p.identity_monodromy},
              {"pass", p.pass}};
}

Json to_json(const crosscheck::CrossCheckReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  return Json{{"l", r.l}, {"mu", r.mu}, {"omega", r.omega}, {"points", pts}, {"pass", r.pass}, {"notes", r.notes}};
}

Json to_json(const crosscheck::CountReport& r) {
  return Json{{"report", to_json(r.report)},
              {"exact_count", r.exact_count},
              {"numeric_count", r.numeric_count},
              {"matched_to_l", r.matched_to_l},
              {"pass", r.pass}};
}

Json to_json(const crosscheck::SymmetryReport& r) {
  Json recs = Json::array();
  for (const auto& x : r.records)
    recs.push_back(Json{{"kind", x.kind},
                        {"s", x.sample.s},
                        {"A", x.sample.A},
                        {"omega", x.sample.omega},
                        {"lhs", x.lhs},
                        {"rhs", x.rhs},
                        {"pass", x.pass}});
  return Json{{"records", recs}, {"max_deviation", r.max_deviation}, {"pass", r.pass}};
}

Json to_json(const crosscheck::OrderingReport& r) {
  Json pairing = Json::array();
  for (const auto& row : r.pairing) {
    Json jr = Json::array();
    for (const auto& [s, sign] : row) jr.push_back(std::to_string(s) + sign);
    pairing.push_back(jr);
  }
  return Json{{"l", r.l},
              {"mu_grid", r.mu_grid},
              {"omegas", r.omegas},
              {"pairing", pairing},
              {"strictly_decreasing", r.strictly_decreasing},
              {"pairing_constant", r.pairing_constant},
              {"pass", r.pass}};
}

}  // namespace heun::io
