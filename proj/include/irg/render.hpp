#pragma once

#include <string>

#include "irg/graph.hpp"
#include "irg/interval.hpp"
#include "irg/ordering.hpp"

namespace irg {

// Text rendering of the ordered adjacency matrix with its row/column runs,
// same-part skips and uncovered cells. Positions, vertex names (v1..vn) and
// part names (X1..Xr) are 1-indexed to match hand calculations; output is
// byte-deterministic.
std::string annotate_matrix(const RPartiteGraph& graph, const VertexOrdering& ordering);

// One line per vertex in (lo, hi, id) order: label, part, interval, and a
// dash bar over a shared axis with half-unit resolution. Point intervals
// render as a single mark.
std::string render_ascii(const IntervalModel& model, const RPartiteGraph& graph);

}  // namespace irg
