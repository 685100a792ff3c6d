#pragma once

// JSON renderings of the computed objects.  Field order is fixed and
// floating point values carry 6 significant digits.

#include <string>

#include "json.hpp"
#include "mtl/growth.hpp"
#include "mtl/splittings.hpp"
#include "mtl/suspension.hpp"

namespace mtl {

using Json = nlohmann::ordered_json;

double six_digits(double x);

Json to_json(const Bounds& b);
Json growth_json(const FreeBasis& basis, const std::string& name, const GrowthReport& r);
Json subgroup_json(const FreeBasis& basis, const SubgroupGraph& g);
Json verification_json(const FreeBasis& basis, const VerificationReport& r);
Json peripheral_json(const FreeBasis& basis, const DecompositionResult& d);
Json suspension_json(const TorusPresentation& p, const RelHypStructure& r);

}  // namespace mtl
