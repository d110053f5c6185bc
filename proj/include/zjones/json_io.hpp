#pragma once

#include <json.hpp>

#include "zjones/hseries.hpp"

namespace zj {

using json = nlohmann::ordered_json;

json to_json(const MPoly& p);
json to_json(const HSeries& f);
MPoly mpoly_from_json(const json& j, const RingPtr& ring);
// The ring is taken from `ring` if given, otherwise from the union of the exponent keys.
HSeries hseries_from_json(const json& j, RingPtr ring = nullptr);

// %.15g then reparsed, so printed floats do not depend on the last ulp.
double round15(double x);
json complex_json(std::complex<double> z);

}  // namespace zj
