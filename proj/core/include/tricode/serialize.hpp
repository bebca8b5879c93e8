#pragma once

#include "tricode/code.hpp"
#include "tricode/identities.hpp"

#include <string>
#include <vector>

namespace tricode {

/// {"l": l, "counts": {"486": "124245576", ...}, "total": "..."}; weights ascending,
/// counts as decimal strings.
std::string to_json(const WeightDistribution& d);

/// Header "weight,count", then one row per weight, ascending.
std::string to_csv(const WeightDistribution& d);

/// Inverse of to_json. Throws ConfigurationError on malformed input.
WeightDistribution distribution_from_json(const std::string& text);

/// [{"name": ..., "lhs": "...", "rhs": "...", "match": true}, ...]
std::string to_json(const std::vector<IdentityCheck>& checks);

} // namespace tricode
