#pragma once

#include <json.hpp>

#include "twistor/fibration.hpp"
#include "twistor/implicitize.hpp"
#include "twistor/verify.hpp"

namespace twistor {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json to_json(const Line3& line);
Line3 line_from_json(const Json& j);

Json to_json(const PlueckerPoint& p);
PlueckerPoint pluecker_from_json(const Json& j);

Json to_json(const TwistorCertificate& cert);

Json to_json(const ImplicitSurface& surface);
ImplicitSurface surface_from_json(const Json& j);

Json to_json(const Certificate& cert);

}  // namespace twistor
