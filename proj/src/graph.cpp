#include "irg/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "irg/interval.hpp"

namespace irg {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Unbiased bounded draw on top of mt19937_64, so generated instances do not
// depend on the standard library's distribution internals.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (bound - 1);
    for (;;) {
        const std::uint64_t x = rng();
        const std::uint64_t rem = x % bound;
        if (x - rem <= limit) return rem;
    }
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<int> random_parts(std::mt19937_64& rng, int n, int r) {
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        parts[static_cast<std::size_t>(v)] = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r)));
    return parts;
}

}  // namespace

RPartiteGraph RPartiteGraph::from_edges(int n, int r, std::vector<int> parts,
                                        std::vector<std::pair<int, int>> edges) {
    if (n < 1) fail("vertex count must be positive");
    if (r < 1) fail("part count must be positive");
    if (static_cast<int>(parts.size()) != n) fail("parts array must list one part per vertex");
    for (int v = 0; v < n; ++v) {
        const int p = parts[static_cast<std::size_t>(v)];
        if (p < 0 || p >= r) {
            std::ostringstream msg;
            msg << "part id " << p << " of vertex " << v << " out of range (r=" << r << ")";
            fail(msg.str());
        }
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream msg;
            msg << "vertex id out of range in edge (" << u << "," << v << ")";
            fail(msg.str());
        }
        if (u == v) {
            std::ostringstream msg;
            msg << "self-loop (" << u << "," << v << ") not allowed";
            fail(msg.str());
        }
        if (parts[static_cast<std::size_t>(u)] == parts[static_cast<std::size_t>(v)]) {
            std::ostringstream msg;
            msg << "same-partite edge (" << u << "," << v << ")";
            fail(msg.str());
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    RPartiteGraph g;
    g.n_ = n;
    g.r_ = r;
    g.parts_ = std::move(parts);
    g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.adj_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.nbrs_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        g.adj_[static_cast<std::size_t>(u) * g.words_ + (static_cast<unsigned>(v) >> 6)] |=
            std::uint64_t{1} << (v & 63);
        g.adj_[static_cast<std::size_t>(v) * g.words_ + (static_cast<unsigned>(u) >> 6)] |=
            std::uint64_t{1} << (u & 63);
        g.nbrs_[static_cast<std::size_t>(u)].push_back(v);
        g.nbrs_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.nbrs_) std::sort(list.begin(), list.end());
    g.edges_ = std::move(edges);
    return g;
}

RPartiteGraph random_rpartite(const InstanceSeedSpec& spec) {
    if (spec.n < 1) fail("n must be positive");
    if (spec.r < 1) fail("r must be positive");
    if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
        fail("edge probability must lie in [0,1]");

    std::mt19937_64 rng(spec.seed);
    std::vector<int> parts = random_parts(rng, spec.n, spec.r);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) {
            if (parts[static_cast<std::size_t>(u)] == parts[static_cast<std::size_t>(v)]) continue;
            if (uniform_unit(rng) < spec.edge_probability) edges.emplace_back(u, v);
        }
    return RPartiteGraph::from_edges(spec.n, spec.r, std::move(parts), std::move(edges));
}

std::pair<RPartiteGraph, IntervalModel> random_interval_instance(int n, int r,
                                                                 std::uint64_t seed) {
    if (n < 1) fail("n must be positive");
    if (r < 1) fail("r must be positive");

    std::mt19937_64 rng(seed);
    std::vector<int> parts = random_parts(rng, n, r);

    // 2n distinct grid points out of 1..4n via a partial Fisher-Yates.
    std::vector<int> grid(static_cast<std::size_t>(4 * n));
    for (int i = 0; i < 4 * n; ++i) grid[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < 2 * n; ++i) {
        const auto j =
            i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(4 * n - i)));
        std::swap(grid[static_cast<std::size_t>(i)], grid[static_cast<std::size_t>(j)]);
    }

    IntervalModel model;
    model.intervals.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int a = grid[static_cast<std::size_t>(2 * v)];
        int b = grid[static_cast<std::size_t>(2 * v + 1)];
        if (a > b) std::swap(a, b);
        model.intervals[static_cast<std::size_t>(v)] = {2 * static_cast<std::int64_t>(a),
                                                        2 * static_cast<std::int64_t>(b)};
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (parts[static_cast<std::size_t>(u)] == parts[static_cast<std::size_t>(v)]) continue;
            if (intervals_intersect(model.intervals[static_cast<std::size_t>(u)],
                                    model.intervals[static_cast<std::size_t>(v)]))
                edges.emplace_back(u, v);
        }
    return {RPartiteGraph::from_edges(n, r, std::move(parts), std::move(edges)),
            std::move(model)};
}

std::vector<std::vector<bool>> adjacency_matrix(const RPartiteGraph& graph,
                                                const VertexOrdering& ordering) {
    if (ordering.size() != graph.vertex_count())
        fail("ordering size does not match vertex count");
    const int n = graph.vertex_count();
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                p != q && graph.adjacent(ordering.vertex_at(p), ordering.vertex_at(q));
    return m;
}

RPartiteGraph induced_subgraph(const RPartiteGraph& graph, const std::vector<int>& vertices) {
    const int n = graph.vertex_count();
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        if (v < 0 || v >= n) fail("induced vertex id out of range");
        if (i > 0 && vertices[i - 1] >= v) fail("induced vertex list must be strictly increasing");
        rank[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<int> parts;
    parts.reserve(vertices.size());
    for (int v : vertices) parts.push_back(graph.part_of(v));
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : graph.edges()) {
        const int ru = rank[static_cast<std::size_t>(u)];
        const int rv = rank[static_cast<std::size_t>(v)];
        if (ru >= 0 && rv >= 0) edges.emplace_back(ru, rv);
    }
    return RPartiteGraph::from_edges(static_cast<int>(vertices.size()), graph.part_count(),
                                     std::move(parts), std::move(edges));
}

}  // namespace irg
