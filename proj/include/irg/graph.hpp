#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "irg/interval.hpp"
#include "irg/ordering.hpp"

namespace irg {

// r-partite graph: n vertices carrying part labels in 0..r-1 and a symmetric
// adjacency relation restricted to cross-part pairs. Values are immutable
// after construction and safe to share across threads.
//
// Invariants enforced by from_edges:
//   - no self-loops
//   - adjacent vertices lie in different parts (parts are stable sets)
//   - every part label is < r (declared r; empty parts are legal)
class RPartiteGraph {
public:
    // Throws std::invalid_argument on any invariant violation. Duplicate
    // edges are deduplicated silently; parsers that want to warn about them
    // do their own detection first.
    static RPartiteGraph from_edges(int n, int r, std::vector<int> parts,
                                    std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int part_count() const { return r_; }
    int part_of(int v) const { return parts_[v]; }
    const std::vector<int>& parts() const { return parts_; }

    bool adjacent(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >>
                (v & 63)) &
               1u;
    }

    // Neighbors of v, ascending by vertex id.
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

    // Normalized edge list: u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    friend bool operator==(const RPartiteGraph& a, const RPartiteGraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.parts_ == b.parts_ && a.edges_ == b.edges_;
    }

private:
    RPartiteGraph() = default;

    int n_ = 0;
    int r_ = 0;
    std::size_t words_ = 0;  // 64-bit words per adjacency row
    std::vector<int> parts_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::pair<int, int>> edges_;
};

struct InstanceSeedSpec {
    int n = 1;
    int r = 1;
    double edge_probability = 0.0;
    std::uint64_t seed = 0;
};

// Erdos-Renyi style generator on a random part assignment: each cross-part
// pair becomes an edge independently with the given probability.
// Deterministic for a fixed seed.
RPartiteGraph random_rpartite(const InstanceSeedSpec& spec);

// Guaranteed-YES generator: draws n intervals with distinct endpoints on the
// integer grid 1..4n plus random part labels, then takes exactly the
// cross-part intersecting pairs as edges. verify_model on the returned pair
// holds by construction.
std::pair<RPartiteGraph, IntervalModel> random_interval_instance(int n, int r,
                                                                 std::uint64_t seed);

// Entry (p,q) = adjacency of the vertices at positions p and q.
std::vector<std::vector<bool>> adjacency_matrix(const RPartiteGraph& graph,
                                                const VertexOrdering& ordering);

// Subgraph induced by `vertices` (strictly increasing ids). Part labels and
// the declared part count carry over; vertex i of the result is vertices[i].
RPartiteGraph induced_subgraph(const RPartiteGraph& graph, const std::vector<int>& vertices);

}  // namespace irg
