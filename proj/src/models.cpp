#include "irg/models.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "irg/orderings.hpp"

namespace irg {

IntervalModel build_model_farthest_neighbor(const RPartiteGraph& graph,
                                            const VertexOrdering& ordering) {
    if (ordering.size() != graph.vertex_count())
        throw std::invalid_argument("ordering size does not match vertex count");
    const int n = graph.vertex_count();
    IntervalModel model;
    model.intervals.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        const int v = ordering.vertex_at(p);
        int far = p;
        for (int w : graph.neighbors(v)) far = std::max(far, ordering.position_of(w));
        model.intervals[static_cast<std::size_t>(v)] = {2 * static_cast<std::int64_t>(p + 1),
                                                        2 * static_cast<std::int64_t>(far + 1) + 1};
    }
    return model;
}

IntervalModel build_model_coverage_runs(const RPartiteGraph& graph,
                                        const VertexOrdering& ordering) {
    const CoverageReport coverage = compute_coverage(graph, ordering);
    const int n = graph.vertex_count();
    IntervalModel model;
    model.intervals.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        const int v = ordering.vertex_at(p);
        const auto& run = coverage.rows[static_cast<std::size_t>(p)];
        const int end = run.run_end.value_or(p);
        model.intervals[static_cast<std::size_t>(v)] = {2 * static_cast<std::int64_t>(p + 1),
                                                        2 * static_cast<std::int64_t>(end + 1)};
    }
    return model;
}

ModelVerdict verify_model(const RPartiteGraph& graph, const IntervalModel& model) {
    if (model.size() != graph.vertex_count())
        throw std::invalid_argument("model does not cover every vertex");
    const int n = graph.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (graph.part_of(u) == graph.part_of(v)) continue;
            const bool meet = intervals_intersect(model.intervals[static_cast<std::size_t>(u)],
                                                  model.intervals[static_cast<std::size_t>(v)]);
            const bool edge = graph.adjacent(u, v);
            if (edge == meet) continue;
            return {false, ModelCounterexample{u, v,
                                               edge ? ModelFailure::MissingIntersection
                                                    : ModelFailure::SpuriousIntersection}};
        }
    }
    return {true, std::nullopt};
}

VertexOrdering ordering_from_model(const IntervalModel& model) {
    if (model.intervals.empty()) throw std::invalid_argument("model is empty");
    std::vector<int> order(model.intervals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ia = model.intervals[static_cast<std::size_t>(a)];
        const auto& ib = model.intervals[static_cast<std::size_t>(b)];
        if (ia.lo2 != ib.lo2) return ia.lo2 < ib.lo2;
        if (ia.hi2 != ib.hi2) return ia.hi2 < ib.hi2;
        return a < b;
    });
    return VertexOrdering::from_order(std::move(order));
}

}  // namespace irg
