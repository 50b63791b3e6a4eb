#include "irg/orderings.hpp"

#include <algorithm>
#include <stdexcept>

namespace irg {

namespace {

void require_matching(const RPartiteGraph& graph, const VertexOrdering& ordering) {
    if (ordering.size() != graph.vertex_count())
        throw std::invalid_argument("ordering size does not match vertex count");
}

}  // namespace

const char* pattern_kind_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::P1: return "P1";
        case PatternKind::P2: return "P2";
        case PatternKind::P3: return "P3";
        case PatternKind::HH: return "HH";
    }
    return "?";
}

GioResult is_generalized_interval_ordering(const RPartiteGraph& graph,
                                           const VertexOrdering& ordering) {
    require_matching(graph, ordering);
    const int n = graph.vertex_count();

    // Per anchor position j it suffices to scan up to the farthest neighbor:
    // a middle position that breaks the condition for some edge breaks it for
    // the edge reaching farthest right.
    for (int j = 0; j < n; ++j) {
        const int u = ordering.vertex_at(j);
        int far = j;
        for (int w : graph.neighbors(u)) far = std::max(far, ordering.position_of(w));
        for (int l = j + 1; l < far; ++l) {
            const int mid = ordering.vertex_at(l);
            if (graph.part_of(mid) == graph.part_of(u) || graph.adjacent(u, mid)) continue;
            // First bad middle for anchor j; the smallest offending edge is
            // the nearest neighbor placed beyond it.
            for (int i = l + 1; i <= far; ++i) {
                if (graph.adjacent(u, ordering.vertex_at(i)))
                    return {false, GioViolation{j, i, l}};
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<PatternWitness> find_forbidden_patterns(const RPartiteGraph& graph,
                                                    const VertexOrdering& ordering,
                                                    std::size_t limit) {
    require_matching(graph, ordering);
    const int n = graph.vertex_count();
    std::vector<PatternWitness> found;
    if (limit == 0) return found;

    // Any witness anchored at pi ends at a neighbor of vi, so both inner
    // loops stop at vi's farthest neighbor. A middle position pj below that
    // bound that is eligible (cross-part non-neighbor) immediately yields a
    // witness, so pattern-free scans never enter the innermost loop.
    for (int pi = 0; pi < n; ++pi) {
        const int vi = ordering.vertex_at(pi);
        int far = pi;
        for (int w : graph.neighbors(vi)) far = std::max(far, ordering.position_of(w));
        for (int pj = pi + 1; pj < far; ++pj) {
            const int vj = ordering.vertex_at(pj);
            if (graph.part_of(vi) == graph.part_of(vj) || graph.adjacent(vi, vj)) continue;
            for (int pk = pj + 1; pk <= far; ++pk) {
                const int vk = ordering.vertex_at(pk);
                if (!graph.adjacent(vi, vk)) continue;
                // part(vi) != part(vj) held above and part(vi) != part(vk)
                // follows from the edge, so the parts are pairwise distinct
                // unless vj and vk share one.
                PatternKind kind;
                if (graph.part_of(vj) == graph.part_of(vk)) {
                    kind = PatternKind::P1;
                } else {
                    kind = graph.adjacent(vj, vk) ? PatternKind::P3 : PatternKind::P2;
                }
                found.push_back({kind, {pi, pj, pk}, {vi, vj, vk}});
                if (found.size() >= limit) return found;
            }
        }
    }
    return found;
}

namespace {

// Shared run scanner. `row_major` selects whether cell (base, c) is read as
// matrix entry (base, c) or (c, base); the two agree on a symmetric adjacency
// but the report keeps both sides explicit.
RunEntry scan_run(const RPartiteGraph& graph, const VertexOrdering& ordering, int base,
                  bool row_major) {
    const int n = graph.vertex_count();
    const int u = ordering.vertex_at(base);
    RunEntry entry;
    for (int p = base + 1; p < n; ++p) {
        if (graph.part_of(ordering.vertex_at(p)) != graph.part_of(u)) {
            entry.anchor = p;
            break;
        }
    }
    if (!entry.anchor) return entry;

    auto one_at = [&](int p) {
        const int w = ordering.vertex_at(p);
        return row_major ? graph.adjacent(u, w) : graph.adjacent(w, u);
    };
    if (!one_at(*entry.anchor)) return entry;

    entry.cells.push_back(*entry.anchor);
    for (int p = *entry.anchor + 1; p < n; ++p) {
        if (one_at(p)) {
            entry.cells.push_back(p);
        } else if (graph.part_of(ordering.vertex_at(p)) != graph.part_of(u)) {
            break;  // a zero outside the base part ends the almost consecutive run
        }
    }
    entry.run_end = entry.cells.back();
    return entry;
}

}  // namespace

CoverageReport compute_coverage(const RPartiteGraph& graph, const VertexOrdering& ordering) {
    require_matching(graph, ordering);
    const int n = graph.vertex_count();
    CoverageReport report;
    report.rows.reserve(static_cast<std::size_t>(n));
    report.cols.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) report.rows.push_back(scan_run(graph, ordering, i, true));
    for (int j = 0; j < n; ++j) report.cols.push_back(scan_run(graph, ordering, j, false));

    // A 1 above the diagonal can only be claimed by its row run, a 1 below it
    // only by its column run; runs never reach left of or above the diagonal.
    for (int p = 0; p < n; ++p) {
        const int vp = ordering.vertex_at(p);
        for (int q = 0; q < n; ++q) {
            if (p == q || !graph.adjacent(vp, ordering.vertex_at(q))) continue;
            const auto& run = p < q ? report.rows[static_cast<std::size_t>(p)]
                                    : report.cols[static_cast<std::size_t>(q)];
            const int needle = p < q ? q : p;
            if (!std::binary_search(run.cells.begin(), run.cells.end(), needle))
                report.uncovered.emplace_back(p, q);
        }
    }
    return report;
}

bool is_r_interval_ordering(const RPartiteGraph& graph, const VertexOrdering& ordering) {
    return compute_coverage(graph, ordering).all_ones_covered();
}

std::optional<PatternWitness> find_hell_huang_pattern(const RPartiteGraph& graph,
                                                      const VertexOrdering& ordering) {
    require_matching(graph, ordering);
    if (graph.part_count() != 2)
        throw std::invalid_argument("bipartite-only operation: graph declares r != 2");
    const int n = graph.vertex_count();
    for (int pa = 0; pa < n; ++pa) {
        const int va = ordering.vertex_at(pa);
        for (int pb = pa + 1; pb < n; ++pb) {
            const int vb = ordering.vertex_at(pb);
            if (graph.part_of(vb) != graph.part_of(va)) continue;
            for (int pc = pb + 1; pc < n; ++pc) {
                const int vc = ordering.vertex_at(pc);
                if (graph.part_of(vc) == graph.part_of(va)) continue;
                if (graph.adjacent(va, vc) && !graph.adjacent(vb, vc))
                    return PatternWitness{PatternKind::HH, {pa, pb, pc}, {va, vb, vc}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace irg
