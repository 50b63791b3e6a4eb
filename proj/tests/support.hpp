#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here sticks to the public graph accessors and re-derives the
// checks straight from their definitions, so a bug in the library cannot
// hide behind itself.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "irg/graph.hpp"
#include "irg/interval.hpp"
#include "irg/ordering.hpp"

namespace irg::test {

// ---------------------------------------------------------------- fixtures

// The 3-partite example graph: parts red {v1,v6,v10}, green {v2,v8,v9},
// black {v3,v4,v5,v7}; ids 0-indexed.
inline RPartiteGraph fig4() {
    return RPartiteGraph::from_edges(
        10, 3, {0, 1, 2, 2, 2, 0, 2, 1, 1, 0},
        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 5}, {4, 5}, {4, 7},
         {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}});
}

// Interval representation printed alongside the example matrix (vertex v2
// deliberately carries [3,4]).
inline IntervalModel fig4_caption_model() {
    IntervalModel m;
    m.intervals = {{2, 6},   {6, 8},   {6, 6},   {8, 12},  {10, 16},
                   {12, 18}, {14, 18}, {16, 20}, {18, 18}, {20, 20}};
    return m;
}

// Bipartite 6-cycle, the classic NO instance.
inline RPartiteGraph c6_bipartite() {
    return RPartiteGraph::from_edges(6, 2, {0, 1, 0, 1, 0, 1},
                                     {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

inline std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// ------------------------------------------------------------ enumeration

template <typename Fn>
void for_each_ordering(int n, Fn&& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(VertexOrdering::from_order(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Every graph on n vertices with parts drawn from 0..r-1 and every
// cross-part edge subset. The callback also sees the enumeration index.
template <typename Fn>
void for_each_small_graph(int n, int r, Fn&& fn) {
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    std::uint64_t index = 0;
    for (;;) {
        std::vector<std::pair<int, int>> cross;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (parts[static_cast<std::size_t>(u)] != parts[static_cast<std::size_t>(v)])
                    cross.emplace_back(u, v);
        const std::uint64_t subsets = std::uint64_t{1} << cross.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t b = 0; b < cross.size(); ++b)
                if (mask >> b & 1) edges.push_back(cross[b]);
            fn(RPartiteGraph::from_edges(n, r, parts, std::move(edges)), index++);
        }
        int pos = n - 1;
        while (pos >= 0 && parts[static_cast<std::size_t>(pos)] == r - 1) {
            parts[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++parts[static_cast<std::size_t>(pos)];
    }
}

inline VertexOrdering random_ordering(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return VertexOrdering::from_order(std::move(perm));
}

// -------------------------------------------------------------- oracles

// Literal reading of the ordering condition: for every edge spanning
// positions j < i and every middle position l, a different-part middle must
// be adjacent to the vertex at j.
inline bool naive_gio(const RPartiteGraph& g, const VertexOrdering& o) {
    const int n = g.vertex_count();
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            if (!g.adjacent(o.vertex_at(j), o.vertex_at(i))) continue;
            for (int l = j + 1; l < i; ++l) {
                const int mid = o.vertex_at(l);
                if (g.part_of(mid) != g.part_of(o.vertex_at(j)) &&
                    !g.adjacent(mid, o.vertex_at(j)))
                    return false;
            }
        }
    return true;
}

// Direct per-kind predicates on every position triple.
inline bool naive_pattern_free(const RPartiteGraph& g, const VertexOrdering& o) {
    const int n = g.vertex_count();
    for (int pi = 0; pi < n; ++pi)
        for (int pj = pi + 1; pj < n; ++pj)
            for (int pk = pj + 1; pk < n; ++pk) {
                const int a = o.vertex_at(pi), b = o.vertex_at(pj), c = o.vertex_at(pk);
                const bool p1 = g.part_of(b) == g.part_of(c) && g.part_of(b) != g.part_of(a) &&
                                g.adjacent(a, c) && !g.adjacent(a, b);
                const bool distinct = g.part_of(a) != g.part_of(b) &&
                                      g.part_of(b) != g.part_of(c) &&
                                      g.part_of(a) != g.part_of(c);
                const bool p2 = distinct && g.adjacent(a, c) && !g.adjacent(a, b) &&
                                !g.adjacent(b, c);
                const bool p3 = distinct && g.adjacent(a, c) && !g.adjacent(a, b) &&
                                g.adjacent(b, c);
                if (p1 || p2 || p3) return false;
            }
    return true;
}

// Farthest position reachable from each vertex through consecutively
// adjacent different-part vertices (the construction used to certify
// pattern-free orderings); returns one value per position.
inline std::vector<int> consecutive_reach(const RPartiteGraph& g, const VertexOrdering& o) {
    const int n = g.vertex_count();
    std::vector<int> reach(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int v = o.vertex_at(i);
        int t = i;
        for (int l = i + 1; l < n; ++l) {
            const int w = o.vertex_at(l);
            if (g.part_of(w) == g.part_of(v)) continue;
            if (!g.adjacent(v, w)) break;
            t = l;
        }
        reach[static_cast<std::size_t>(i)] = t;
    }
    return reach;
}

// Intersection graph induced by a model and part labels; the second route
// for checking verify_model and the instance generator.
inline RPartiteGraph graph_from_intervals(const std::vector<int>& parts, int r,
                                          const IntervalModel& model) {
    const int n = static_cast<int>(parts.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (parts[static_cast<std::size_t>(u)] != parts[static_cast<std::size_t>(v)] &&
                intervals_intersect(model.intervals[static_cast<std::size_t>(u)],
                                    model.intervals[static_cast<std::size_t>(v)]))
                edges.emplace_back(u, v);
    return RPartiteGraph::from_edges(n, r, parts, std::move(edges));
}

}  // namespace irg::test
