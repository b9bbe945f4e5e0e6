#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mvlift/analysis.hpp"
#include "mvlift/lifting.hpp"

namespace mvlift {

using Json = nlohmann::ordered_json;

/// {bkk_bound, degenerate_directions: [{u, status, witness, ...}], strategies: [...]}
Json analysis_to_json(const AnalysisReport& report);

/// {strategy, u, alpha|lambda|gcd|monomial, mv_before, mv_after, transform, ...}
Json provenance_to_json(const LiftResult& lift);

Json change_to_json(const MonomialChange& change);
MonomialChange change_from_json(const Json& j);

/// Lifted system file with the provenance block on one comment line.
std::string serialize_lift(const LiftResult& lift);

/// The provenance block embedded by serialize_lift, if present.
std::optional<Json> read_provenance(const std::string& system_text);

/// Integers that fit are emitted as JSON numbers, larger ones as strings.
Json integer_to_json(const Integer& v);

}  // namespace mvlift
