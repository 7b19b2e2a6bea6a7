#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "netent/entropy.hpp"
#include "netent/graph.hpp"

namespace netent {

/// Parse outcome: the graph plus non-fatal diagnostics.
struct ParseReport {
    Graph graph;
    std::vector<std::string> warnings;
    std::size_t line_count = 0;
};

/// Parses whitespace-delimited edge-list text.
///
/// Each non-empty, non-comment ('#' or '%') line contributes one edge from
/// its first two tokens; extra tokens (weights) are ignored with a warning.
/// Duplicate edges collapse with a warning, self-loop lines throw
/// SelfLoopError, one-token lines throw MalformedLineError.
ParseReport parse_edge_list(std::string_view text);

/// Parses the Pajek subset *Vertices / *Edges / *Arcs.
///
/// Vertex ids are 1-based; quoted vertex names are kept as labels. *Arcs
/// pairs fold into undirected edges with a warning. Declared but unreferenced
/// vertices become isolated nodes.
ParseReport parse_pajek(std::string_view text);

/// One "u v" line per edge, in stored edge order. Isolated nodes cannot be
/// expressed in this format and are dropped.
std::string write_edge_list(const Graph& g);

/// "q,entropy" header plus one row per point, shortest round-trip decimals,
/// '\n' endings. Byte-deterministic for equal inputs.
std::string write_sweep_csv(const SweepResult& r);

/// Single JSON document: provenance under "source", points as an ordered
/// array of {q, entropy}. Key order is fixed.
std::string write_sweep_json(const SweepResult& r);

}  // namespace netent
