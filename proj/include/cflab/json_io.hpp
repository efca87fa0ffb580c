#pragma once

#include <json.hpp>

#include "cflab/density.hpp"
#include "cflab/interval_set.hpp"
#include "cflab/substitution.hpp"
#include "cflab/uniqueness.hpp"

namespace cflab {

using json = nlohmann::json;

json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const json& j);

json to_json(const DensitySpec& d);
DensitySpec density_from_json(const json& j);

json to_json(const SubstitutionPair& p);
SubstitutionPair pair_from_json(const json& j);

json to_json(const UniquenessCertificate& c);
json to_json(const VerificationReport& r);

}  // namespace cflab
