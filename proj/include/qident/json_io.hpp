#pragma once

#include <json.hpp>

#include "qident/identities.hpp"
#include "qident/partitions.hpp"

namespace qident {

/// {"parts":[...descending...]}
nlohmann::ordered_json to_json(const Partition& p);

/// {"pi":[...],"lambda":[...]}
nlohmann::ordered_json to_json(const Bipartition& bp);

/// {"identity":..., "order":..., "verdict":..., "first_divergence":{...}?}
nlohmann::ordered_json to_json(const VerificationReport& rep);

} // namespace qident
