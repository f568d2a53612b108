#pragma once

#include "evenpair/generators.hpp"
#include "evenpair/graph.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace evenpair {

enum class GraphFileFormat { DimacsCol, EdgeList };

/// DIMACS .col: "c" comments, one "p edge <n> <m>" header, then 1-based
/// "e <u> <v>" lines. Duplicate edges collapse; self-loops are rejected.
Graph parse_dimacs(std::string_view text);

/// Canonical form: header plus ascending 1-based edge lines, no comments.
/// Vertices are written by rank, so parse(write(g)) == g whenever the ids
/// are already 0..n-1.
std::string write_dimacs(const Graph& g);

/// Plain text alternative: optional "#" comments, a first line "<n>", then
/// 0-based "<u> <v>" lines.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFileFormat format);
std::string write_graph(const Graph& g, GraphFileFormat format);

/// FNV-1a over the canonical DIMACS serialization, as "fnv1a64:<hex>".
std::string graph_digest(const Graph& g);

std::uint64_t fnv1a64(std::string_view data);

nlohmann::json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace evenpair
