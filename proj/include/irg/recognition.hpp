#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "irg/graph.hpp"
#include "irg/interval.hpp"
#include "irg/models.hpp"
#include "irg/ordering.hpp"
#include "irg/orderings.hpp"

namespace irg {

// Exhaustive enumeration stays under desk-scale seconds up to this order.
inline constexpr int kDefaultOracleCap = 9;

struct SearchStats {
    std::uint64_t nodes_expanded = 0;      // accepted placements (backtracking search)
    std::uint64_t orderings_examined = 0;  // complete orderings evaluated (oracle)
};

struct RecognitionResult {
    bool yes = false;
    std::optional<VertexOrdering> ordering;  // certifying ordering on YES
    std::optional<IntervalModel> model;      // certifying model on YES
    SearchStats stats;
};

// Backtracking search for an ordering with no forbidden pattern. Positions
// are filled left to right with unused vertices in ascending id; a placement
// is rejected as soon as it completes a violating triple, which preserves the
// ordering condition on every prefix. Returns the lexicographically first
// valid ordering (by vertex-id sequence) with its farthest-neighbor model,
// or NO after exhausting the tree. Every YES is self-certified: the model is
// re-verified and the ordering re-checked before returning.
RecognitionResult recognize(const RPartiteGraph& graph);

// Brute-force oracle: walks all n! orderings in lexicographic order,
// evaluates the three characterization checks on each and insists they
// agree (std::logic_error otherwise), answering YES at the first ordering
// that passes. Throws std::invalid_argument when n exceeds `cap`.
RecognitionResult recognize_exhaustive(const RPartiteGraph& graph, int cap = kDefaultOracleCap);

struct CrossValidateReport {
    bool agree = false;  // verdicts match and no per-ordering check disagreement
    RecognitionResult search;
    RecognitionResult oracle;
    std::uint64_t orderings_checked = 0;
    std::uint64_t threeway_agreements = 0;
    std::uint64_t threeway_disagreements = 0;
    std::string disagreement_dump;  // reproducing instance document, empty when agree
};

// Runs both recognizers and compares verdicts; also reports how often the
// three ordering checks agreed across the oracle's enumeration. Any
// disagreement ships a minimal reproducing instance dump.
CrossValidateReport cross_validate(const RPartiteGraph& graph, int cap = kDefaultOracleCap);

}  // namespace irg
