#include "irg/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "irg/io.hpp"

namespace irg {

namespace {

// Every YES answer must survive an independent re-check; a failure here is a
// bug in the recognizer, not in the instance.
void certify_yes(const RPartiteGraph& graph, const VertexOrdering& ordering,
                 const IntervalModel& model, const char* who) {
    const bool gio = is_generalized_interval_ordering(graph, ordering).ok;
    const bool pattern_free = find_forbidden_patterns(graph, ordering, 1).empty();
    const bool covered = is_r_interval_ordering(graph, ordering);
    const bool model_ok = verify_model(graph, model).ok;
    if (gio && pattern_free && covered && model_ok) return;
    std::ostringstream msg;
    msg << who << " produced an uncertified YES (gio=" << gio << " patterns=" << !pattern_free
        << " coverage=" << covered << " model=" << model_ok << ")";
    throw std::logic_error(msg.str());
}

struct BacktrackState {
    const RPartiteGraph& graph;
    std::vector<int> order;        // positions filled so far
    std::vector<char> used;        // by vertex id
    std::vector<int> block_count;  // per placed vertex: later different-part non-neighbors
    std::uint64_t nodes = 0;

    explicit BacktrackState(const RPartiteGraph& g)
        : graph(g),
          used(static_cast<std::size_t>(g.vertex_count()), 0),
          block_count(static_cast<std::size_t>(g.vertex_count()), 0) {
        order.reserve(static_cast<std::size_t>(g.vertex_count()));
    }

    // A placement is legal iff no already-placed neighbor has acquired a
    // different-part non-neighbor behind it; such a vertex can never again be
    // the lower endpoint of a pattern-free edge.
    bool can_place(int v) const {
        for (int u : order)
            if (block_count[static_cast<std::size_t>(u)] > 0 && graph.adjacent(u, v)) return false;
        return true;
    }

    void place(int v) {
        for (int u : order)
            if (graph.part_of(u) != graph.part_of(v) && !graph.adjacent(u, v))
                ++block_count[static_cast<std::size_t>(u)];
        order.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
        ++nodes;
    }

    void unplace() {
        const int v = order.back();
        order.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
        for (int u : order)
            if (graph.part_of(u) != graph.part_of(v) && !graph.adjacent(u, v))
                --block_count[static_cast<std::size_t>(u)];
    }

    bool search() {
        const int n = graph.vertex_count();
        if (static_cast<int>(order.size()) == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || !can_place(v)) continue;
            place(v);
            if (search()) return true;
            unplace();
        }
        return false;
    }
};

void require_within_cap(const RPartiteGraph& graph, int cap) {
    if (graph.vertex_count() > cap) {
        std::ostringstream msg;
        msg << "instance above oracle cap (n=" << graph.vertex_count() << ", cap=" << cap << ")";
        throw std::invalid_argument(msg.str());
    }
}

struct OracleScan {
    bool yes = false;
    std::vector<int> first_valid;
    std::uint64_t examined = 0;
    std::uint64_t agreements = 0;
    std::uint64_t disagreements = 0;
    std::vector<int> first_disagreement;
};

// Lexicographic walk over all orderings; the three characterization checks
// are evaluated side by side on each one.
OracleScan scan_all_orderings(const RPartiteGraph& graph) {
    const int n = graph.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    OracleScan scan;
    do {
        const VertexOrdering ordering = VertexOrdering::from_order(perm);
        ++scan.examined;
        const bool gio = is_generalized_interval_ordering(graph, ordering).ok;
        const bool pattern_free = find_forbidden_patterns(graph, ordering, 1).empty();
        const bool covered = is_r_interval_ordering(graph, ordering);
        if (gio == pattern_free && pattern_free == covered) {
            ++scan.agreements;
        } else {
            ++scan.disagreements;
            if (scan.first_disagreement.empty()) scan.first_disagreement = perm;
        }
        if (gio && pattern_free && covered) {
            scan.yes = true;
            scan.first_valid = perm;
            return scan;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return scan;
}

RecognitionResult result_from_scan(const RPartiteGraph& graph, const OracleScan& scan) {
    RecognitionResult result;
    result.stats.orderings_examined = scan.examined;
    result.yes = scan.yes;
    if (scan.yes) {
        result.ordering = VertexOrdering::from_order(scan.first_valid);
        result.model = build_model_farthest_neighbor(graph, *result.ordering);
        certify_yes(graph, *result.ordering, *result.model, "recognize_exhaustive");
    }
    return result;
}

}  // namespace

RecognitionResult recognize(const RPartiteGraph& graph) {
    BacktrackState state(graph);
    RecognitionResult result;
    result.yes = state.search();
    result.stats.nodes_expanded = state.nodes;
    if (result.yes) {
        result.ordering = VertexOrdering::from_order(state.order);
        result.model = build_model_farthest_neighbor(graph, *result.ordering);
        certify_yes(graph, *result.ordering, *result.model, "recognize");
    }
    return result;
}

RecognitionResult recognize_exhaustive(const RPartiteGraph& graph, int cap) {
    require_within_cap(graph, cap);
    const OracleScan scan = scan_all_orderings(graph);
    if (scan.disagreements > 0) {
        std::ostringstream msg;
        msg << "characterization checks disagree on an ordering of instance:\n"
            << serialize_instance(graph) << "ordering:";
        for (int v : scan.first_disagreement) msg << ' ' << v;
        throw std::logic_error(msg.str());
    }
    return result_from_scan(graph, scan);
}

CrossValidateReport cross_validate(const RPartiteGraph& graph, int cap) {
    require_within_cap(graph, cap);
    CrossValidateReport report;
    report.search = recognize(graph);
    const OracleScan scan = scan_all_orderings(graph);
    report.oracle = result_from_scan(graph, scan);
    report.orderings_checked = scan.examined;
    report.threeway_agreements = scan.agreements;
    report.threeway_disagreements = scan.disagreements;
    report.agree = report.search.yes == report.oracle.yes && scan.disagreements == 0;
    if (!report.agree) {
        std::ostringstream dump;
        dump << serialize_instance(graph);
        if (!scan.first_disagreement.empty()) {
            dump << "ordering:";
            for (int v : scan.first_disagreement) dump << ' ' << v;
            dump << '\n';
        }
        report.disagreement_dump = dump.str();
    }
    return report;
}

}  // namespace irg
