#pragma once

#include "evenpair/coloring.hpp"
#include "evenpair/oracles.hpp"
#include "evenpair/special_pair.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

namespace evenpair {

// Vertex ids are 1-based in every JSON document (matching the DIMACS
// convention) and 0-based inside the library; conversion happens here only.

inline constexpr int result_schema_version = 1;

nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json pair_result_to_json(const EvenPairResult& r);

nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const ContractionTrace& t);
ContractionTrace trace_from_json(const nlohmann::json& j);

nlohmann::json snake_to_json(const Snake& s);

nlohmann::json make_envelope(const std::string& command, const std::string& input_digest,
    nlohmann::json outcome, std::optional<double> total_ms = std::nullopt);

/// Re-check an envelope against the graph it claims to describe. Returns an
/// empty string when everything holds, else a description of the first
/// mismatch. Oracle size guards propagate as OracleLimitError.
std::string verify_envelope(const Graph& g, const nlohmann::json& envelope,
    const OracleLimits& limits);

} // namespace evenpair
