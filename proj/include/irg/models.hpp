#pragma once

#include <optional>
#include <string>

#include "irg/graph.hpp"
#include "irg/interval.hpp"
#include "irg/ordering.hpp"

namespace irg {

// Positions map to axis points 1..n: the vertex at position p sits on the
// integer p+1. Both constructions below are total; they certify membership
// only when the ordering passes the corresponding check.

// Farthest-neighbor construction: the vertex at position p receives
// [p+1, m+1+1/2] where m is the maximum position among its neighbors
// (or p itself when it has none). Left endpoints strictly increase.
IntervalModel build_model_farthest_neighbor(const RPartiteGraph& graph,
                                            const VertexOrdering& ordering);

// Coverage-run construction: the vertex at position p receives [p+1, e+1]
// where e is its row run's end, or the point interval [p+1, p+1] when the
// run is empty. All endpoints integral.
IntervalModel build_model_coverage_runs(const RPartiteGraph& graph,
                                        const VertexOrdering& ordering);

enum class ModelFailure { MissingIntersection, SpuriousIntersection };

struct ModelCounterexample {
    int u = -1;
    int v = -1;
    ModelFailure failure = ModelFailure::MissingIntersection;
};

struct ModelVerdict {
    bool ok = false;
    std::optional<ModelCounterexample> counterexample;  // lexicographically first bad pair
};

// True iff for every cross-part pair, adjacency coincides with interval
// intersection. Same-part intervals are unconstrained. Throws
// std::invalid_argument when the model does not cover every vertex.
ModelVerdict verify_model(const RPartiteGraph& graph, const IntervalModel& model);

// Vertices sorted by (lo, hi, id) ascending. For a valid model of some graph
// this ordering passes the generalized-interval-ordering check whenever left
// endpoints are distinct; ties are broken deterministically for arbitrary
// inputs. Throws std::invalid_argument on an empty model.
VertexOrdering ordering_from_model(const IntervalModel& model);

}  // namespace irg
