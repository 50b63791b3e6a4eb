#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irg/graph.hpp"
#include "irg/ordering.hpp"

namespace irg {

// The three ordered 3-vertex configurations that cannot occur under any
// ordering of an interval r-graph, plus the bipartite pattern used as an
// r=2 cross-check. Positions p_i < p_j < p_k throughout; edge(i,k) and
// non-edge(i,j) are common to all four kinds.
//
//   P1: part(v_j) == part(v_k) != part(v_i)
//   P2: parts pairwise distinct, non-edge(j,k)
//   P3: parts pairwise distinct, edge(j,k)
//   HH: part(v_i) == part(v_j) != part(v_k), non-edge(j,k)   (bipartite)
enum class PatternKind { P1, P2, P3, HH };

const char* pattern_kind_name(PatternKind kind);

struct PatternWitness {
    PatternKind kind;
    std::array<int, 3> positions;  // strictly increasing
    std::array<int, 3> vertices;   // order[positions[.]]

    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// A failed instance of the generalized-interval-ordering condition: the edge
// spans positions (lower, upper) and the vertex at `middle` lies strictly
// between them, outside the lower vertex's part, yet non-adjacent to it.
struct GioViolation {
    int lower = -1;
    int upper = -1;
    int middle = -1;

    friend bool operator==(const GioViolation&, const GioViolation&) = default;
};

struct GioResult {
    bool ok = false;
    std::optional<GioViolation> violation;  // lexicographically smallest (lower, upper, middle)
};

// Checks the ordering condition anchored at the lower endpoint of each edge:
// for an edge at positions j < i, every position l in (j,i) holding a vertex
// outside part(v_j) must be adjacent to v_j.
GioResult is_generalized_interval_ordering(const RPartiteGraph& graph,
                                           const VertexOrdering& ordering);

inline constexpr std::size_t kNoWitnessLimit = std::numeric_limits<std::size_t>::max();

// All P1/P2/P3 occurrences (up to `limit`), in lexicographic order of their
// position triples. Empty result means the ordering is pattern-free.
std::vector<PatternWitness> find_forbidden_patterns(const RPartiteGraph& graph,
                                                    const VertexOrdering& ordering,
                                                    std::size_t limit = kNoWitnessLimit);

// Run descriptor for one row (or, mirrored, one column) of the ordered
// adjacency matrix. `anchor` is s_i: the first later position holding a
// different-part vertex. The run is nonempty only when the matrix has a 1 at
// the anchor; it then collects 1-cells rightward, skipping zeros only at
// columns whose vertex shares the row vertex's part, and ends at the last 1
// so reachable (`run_end`).
struct RunEntry {
    std::optional<int> anchor;
    std::vector<int> cells;       // positions of the 1-cells, ascending
    std::optional<int> run_end;   // cells.back() when nonempty

    bool empty() const { return cells.empty(); }
};

struct CoverageReport {
    std::vector<RunEntry> rows;
    std::vector<RunEntry> cols;
    std::vector<std::pair<int, int>> uncovered;  // 1-cells in no row and no column run

    bool all_ones_covered() const { return uncovered.empty(); }
};

CoverageReport compute_coverage(const RPartiteGraph& graph, const VertexOrdering& ordering);

// True iff the row and column runs jointly cover every 1 of the ordered
// adjacency matrix.
bool is_r_interval_ordering(const RPartiteGraph& graph, const VertexOrdering& ordering);

// Bipartite-only scan for the HH configuration on the ordering as given.
// Returns the lexicographically first witness, if any. Throws
// std::invalid_argument unless the graph declares exactly two parts.
std::optional<PatternWitness> find_hell_huang_pattern(const RPartiteGraph& graph,
                                                      const VertexOrdering& ordering);

}  // namespace irg
