#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irg/graph.hpp"
#include "irg/interval.hpp"
#include "irg/ordering.hpp"

namespace irg {

// Instance documents are JSON:
//   {"n": int, "r": int, "parts": [int; n], "edges": [[u,v], ...],
//    "ordering": [int; n]?, "intervals": [[lo,hi]; n]?, "intervals_x2": [[lo2,hi2]; n]?}
// Vertex ids are 0-indexed on the wire. "intervals" accepts decimals ending
// in .0 or .5 only; "intervals_x2" carries doubled integers for bit-exact
// round-trips and wins when both fields agree (disagreement is an error).

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedInstance {
    RPartiteGraph graph;
    std::optional<VertexOrdering> ordering;
    std::optional<IntervalModel> model;
    std::vector<std::string> warnings;  // e.g. deduplicated duplicate edges
};

ParsedInstance parse_instance(const std::string& text);

// Deterministic serialization (fixed key order, two-space indent, trailing
// newline). Models always serialize through "intervals_x2".
std::string serialize_instance(const RPartiteGraph& graph,
                               const VertexOrdering* ordering = nullptr,
                               const IntervalModel* model = nullptr);

}  // namespace irg
