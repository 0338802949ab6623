#ifndef HEUN_IO_JSON_IO_HPP
#define HEUN_IO_JSON_IO_HPP

#include <json.hpp>

#include "heun/crosscheck/crosscheck.hpp"
#include "heun/dynamics/boundary.hpp"
#include "heun/dynamics/josephson.hpp"
#include "heun/spectral/spectral.hpp"
#include "heun/xi/xi_curve.hpp"

namespace heun::io {

using Json = nlohmann::ordered_json;

Json to_json(const spectral::EigenSpectrum& e);
Json to_json(const spectral::SimpleIntersectionPoint& p);
Json to_json(const spectral::CertificateReport& c);
Json to_json(const xi::GenusReport& g);
Json to_json(const xi::SmoothnessCertificate& c);
Json to_json(const dynamics::RotationNumberResult& r);
Json to_json(const dynamics::MobiusMonodromy& m);
Json to_json(const dynamics::BoundaryPoint& b);
Json to_json(const dynamics::Constriction& c);
Json to_json(const crosscheck::PointRecord& p);
Json to_json(const crosscheck::CrossCheckReport& r);
Json to_json(const crosscheck::CountReport& r);
Json to_json(const crosscheck::SymmetryReport& r);
Json to_json(const crosscheck::OrderingReport& r);

}  // namespace heun::io

#endif  // HEUN_IO_JSON_IO_HPP
