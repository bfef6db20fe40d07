#pragma once

#include <iosfwd>
#include <string>

#include "liftlab/graph.hpp"

namespace liftlab {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0-indexed endpoints. The reader rejects loops, duplicate edges, bad
// endpoints, and count mismatches.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Sidecar tag file: one line per vertex, "<id> <top tuple>-><bottom tuple>"
// with comma-separated tuple entries, e.g. "0 1->2" or "3 0,2->1,2".
void write_tag_file(std::ostream& out, const LiftGraph& lift);
void write_tag_file(const std::string& path, const LiftGraph& lift);

std::string format_tag(const VertexTag& tag);

}  // namespace liftlab
