#include "irg/render.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "irg/models.hpp"
#include "irg/orderings.hpp"

namespace irg {

namespace {

std::string rjust(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string ljust(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string vertex_label(int v) { return "v" + std::to_string(v + 1); }
std::string part_label(int p) { return "X" + std::to_string(p + 1); }

std::string cell_set(const std::vector<int>& positions) {
    std::string out = "{";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(positions[i] + 1);
    }
    return out + "}";
}

void append_runs(std::ostringstream& out, const std::vector<RunEntry>& runs, char prefix) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const RunEntry& run = runs[i];
        out << "  " << prefix << i + 1 << ": ";
        if (!run.anchor) {
            out << "empty\n";
            continue;
        }
        out << "s=" << *run.anchor + 1;
        if (run.empty()) {
            out << " empty\n";
            continue;
        }
        out << " end=" << *run.run_end + 1 << " cells=" << cell_set(run.cells);
        std::vector<int> skips;
        for (int p = *run.anchor + 1, c = 1; p < *run.run_end; ++p) {
            if (c < static_cast<int>(run.cells.size()) && run.cells[static_cast<std::size_t>(c)] == p)
                ++c;
            else
                skips.push_back(p);
        }
        if (!skips.empty()) out << " same-part skip at " << cell_set(skips);
        out << '\n';
    }
}

}  // namespace

std::string annotate_matrix(const RPartiteGraph& graph, const VertexOrdering& ordering) {
    const int n = graph.vertex_count();
    const auto matrix = adjacency_matrix(graph, ordering);
    const CoverageReport coverage = compute_coverage(graph, ordering);

    const std::size_t wp = std::to_string(n).size();
    std::size_t wv = 1;
    for (int p = 0; p < n; ++p)
        wv = std::max(wv, vertex_label(ordering.vertex_at(p)).size());
    std::size_t wx = 1;
    for (int p = 0; p < n; ++p)
        wx = std::max(wx, part_label(graph.part_of(ordering.vertex_at(p))).size());
    const std::size_t wc = wp;  // matrix column width

    std::ostringstream out;
    out << "adjacency matrix under ordering (n=" << n << ", r=" << graph.part_count() << ")\n";

    out << rjust("", wp) << ' ' << ljust("", wv) << ' ' << ljust("", wx) << " |";
    for (int q = 1; q <= n; ++q) out << ' ' << rjust(std::to_string(q), wc);
    out << '\n';
    out << std::string(wp + wv + wx + 2, '-') << "-+" << std::string((wc + 1) * static_cast<std::size_t>(n), '-')
        << '\n';
    for (int p = 0; p < n; ++p) {
        const int v = ordering.vertex_at(p);
        out << rjust(std::to_string(p + 1), wp) << ' ' << ljust(vertex_label(v), wv) << ' '
            << ljust(part_label(graph.part_of(v)), wx) << " |";
        for (int q = 0; q < n; ++q)
            out << ' '
                << rjust(matrix[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] ? "1" : "0", wc);
        out << '\n';
    }

    out << "row runs:\n";
    append_runs(out, coverage.rows, 'R');
    out << "column runs:\n";
    append_runs(out, coverage.cols, 'C');

    if (coverage.uncovered.empty()) {
        out << "uncovered ones: none\n";
        out << "verdict: r-interval ordering\n";
    } else {
        out << "uncovered ones:";
        for (const auto& [p, q] : coverage.uncovered) out << " (" << p + 1 << "," << q + 1 << ")";
        out << '\n';
        out << "verdict: not an r-interval ordering\n";
    }
    return out.str();
}

std::string render_ascii(const IntervalModel& model, const RPartiteGraph& graph) {
    if (model.size() != graph.vertex_count())
        throw std::invalid_argument("model does not cover every vertex");
    const VertexOrdering by_left = ordering_from_model(model);
    const int n = graph.vertex_count();

    std::int64_t base2 = model.intervals[0].lo2;
    std::int64_t max2 = model.intervals[0].hi2;
    for (const auto& iv : model.intervals) {
        base2 = std::min(base2, iv.lo2);
        max2 = std::max(max2, iv.hi2);
    }

    std::size_t wv = 1, wx = 1, wi = 1;
    std::vector<std::string> interval_text(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& iv = model.intervals[static_cast<std::size_t>(v)];
        interval_text[static_cast<std::size_t>(v)] =
            "[" + half_to_string(iv.lo2) + "," + half_to_string(iv.hi2) + "]";
        wv = std::max(wv, vertex_label(v).size());
        wx = std::max(wx, part_label(graph.part_of(v)).size());
        wi = std::max(wi, interval_text[static_cast<std::size_t>(v)].size());
    }
    const std::size_t prefix = wv + 2 + wx + 2 + wi + 2;

    // Two characters per half unit keeps integer tick labels apart.
    const auto column = [&](std::int64_t x2) {
        return static_cast<std::size_t>(2 * (x2 - base2));
    };

    std::ostringstream out;
    out << "interval diagram (n=" << n << ", axis " << half_to_string(base2) << ".."
        << half_to_string(max2) << ")\n";

    std::string labels(prefix, ' ');
    std::string ticks(prefix, ' ');
    for (std::int64_t k2 = base2 % 2 == 0 ? base2 : base2 + 1; k2 <= max2; k2 += 2) {
        const std::size_t col = prefix + column(k2);
        const std::string label = std::to_string(k2 / 2);
        if (labels.size() < col + label.size()) labels.resize(col + label.size(), ' ');
        for (std::size_t i = 0; i < label.size(); ++i) labels[col + i] = label[i];
        if (ticks.size() < col + 1) ticks.resize(col + 1, ' ');
        ticks[col] = '|';
    }
    out << labels << '\n' << ticks << '\n';

    for (int p = 0; p < n; ++p) {
        const int v = by_left.vertex_at(p);
        const auto& iv = model.intervals[static_cast<std::size_t>(v)];
        std::string line = ljust(vertex_label(v), wv) + "  " +
                           ljust(part_label(graph.part_of(v)), wx) + "  " +
                           ljust(interval_text[static_cast<std::size_t>(v)], wi) + "  ";
        line.resize(prefix + column(iv.hi2) + 1, ' ');
        if (iv.is_point()) {
            line[prefix + column(iv.lo2)] = '*';
        } else {
            for (std::size_t c = prefix + column(iv.lo2); c <= prefix + column(iv.hi2); ++c)
                line[c] = '-';
        }
        out << line << '\n';
    }
    return out.str();
}

}  // namespace irg
