#include "irg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "irg/graph.hpp"
#include "irg/io.hpp"
#include "irg/json_format.hpp"
#include "irg/models.hpp"
#include "irg/orderings.hpp"
#include "irg/recognition.hpp"
#include "irg/render.hpp"

namespace irg {

namespace {

using nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot read input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write output file: " + path);
    file << text;
}

ParsedInstance load_instance(const std::string& path, std::istream& in, std::ostream& err) {
    ParsedInstance parsed = parse_instance(read_input(path, in));
    for (const auto& warning : parsed.warnings) err << "warning: " << warning << '\n';
    return parsed;
}

VertexOrdering ordering_or_identity(const ParsedInstance& parsed, std::ostream& err) {
    if (parsed.ordering) return *parsed.ordering;
    err << "note: document carries no ordering; using the identity ordering\n";
    return VertexOrdering::identity(parsed.graph.vertex_count());
}

int oracle_cap_from_env() {
    const char* raw = std::getenv("RECOG_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1)
        throw InputError("invalid RECOG_ORACLE_CAP value: " + std::string(raw));
    return static_cast<int>(value);
}

ordered_json witness_json(const PatternWitness& w) {
    return {{"kind", pattern_kind_name(w.kind)},
            {"positions", {w.positions[0], w.positions[1], w.positions[2]}},
            {"vertices", {w.vertices[0], w.vertices[1], w.vertices[2]}}};
}

// Coverage blocks are 1-indexed on the wire, matching hand calculations on
// the ordered matrix; everything else machine-facing stays 0-indexed.
ordered_json coverage_json(const CoverageReport& coverage) {
    ordered_json block;
    block["index_base"] = 1;
    for (const char* side : {"rows", "cols"}) {
        const auto& runs = side == std::string("rows") ? coverage.rows : coverage.cols;
        auto list = ordered_json::array();
        for (std::size_t i = 0; i < runs.size(); ++i) {
            ordered_json entry;
            entry["pos"] = i + 1;
            entry["s"] = runs[i].anchor ? ordered_json(*runs[i].anchor + 1) : ordered_json(nullptr);
            entry["end"] =
                runs[i].run_end ? ordered_json(*runs[i].run_end + 1) : ordered_json(nullptr);
            auto cells = ordered_json::array();
            for (int c : runs[i].cells) cells.push_back(c + 1);
            entry["cells"] = std::move(cells);
            list.push_back(std::move(entry));
        }
        block[side] = std::move(list);
    }
    auto uncovered = ordered_json::array();
    for (const auto& [p, q] : coverage.uncovered) uncovered.push_back({p + 1, q + 1});
    block["uncovered"] = std::move(uncovered);
    return block;
}

ordered_json stats_json(const SearchStats& stats, bool oracle) {
    return {{"oracle", oracle},
            {"nodes_expanded", stats.nodes_expanded},
            {"orderings_examined", stats.orderings_examined}};
}

ordered_json intervals_x2_json(const IntervalModel& model) {
    auto list = ordered_json::array();
    for (const auto& iv : model.intervals) list.push_back({iv.lo2, iv.hi2});
    return list;
}

ordered_json counterexample_json(const ModelCounterexample& ce) {
    return {{"pair", {ce.u, ce.v}},
            {"failure", ce.failure == ModelFailure::MissingIntersection
                            ? "missing-intersection"
                            : "spurious-intersection"}};
}

std::string dump_report(const ordered_json& report) { return pretty_document(report); }

struct CommonOpts {
    std::string input;
    std::string output;
};

int cmd_check_ordering(const CommonOpts& opts, std::size_t limit, std::istream& in,
                       std::ostream& out, std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    const VertexOrdering ordering = ordering_or_identity(parsed, err);
    const RPartiteGraph& graph = parsed.graph;

    const GioResult gio = is_generalized_interval_ordering(graph, ordering);
    const CoverageReport coverage = compute_coverage(graph, ordering);
    const bool r_interval = coverage.all_ones_covered();
    const auto patterns =
        find_forbidden_patterns(graph, ordering, limit == 0 ? kNoWitnessLimit : limit);
    const bool pattern_free = find_forbidden_patterns(graph, ordering, 1).empty();
    const bool valid = gio.ok && r_interval && pattern_free;

    ordered_json report;
    report["verdict"] = valid ? "yes" : "no";
    report["gio"] = gio.ok;
    if (gio.violation) {
        report["gio_violation"] = {{"edge", {gio.violation->lower, gio.violation->upper}},
                                   {"middle", gio.violation->middle}};
    }
    report["r_interval"] = r_interval;
    auto list = ordered_json::array();
    for (const auto& w : patterns) list.push_back(witness_json(w));
    report["patterns"] = std::move(list);
    if (graph.part_count() == 2) {
        const auto hh = find_hell_huang_pattern(graph, ordering);
        report["hh_pattern"] = hh ? witness_json(*hh) : ordered_json(nullptr);
    }
    report["coverage"] = coverage_json(coverage);
    report["stats"] = {{"n", graph.vertex_count()},
                       {"r", graph.part_count()},
                       {"edges", graph.edge_count()},
                       {"patterns_listed", patterns.size()}};
    write_output(opts.output, out, dump_report(report));
    err << "summary: gio=" << (gio.ok ? "yes" : "no")
        << " r-interval=" << (r_interval ? "yes" : "no") << " patterns=" << patterns.size()
        << '\n';
    return valid ? 0 : 1;
}

int cmd_recognize(const CommonOpts& opts, bool oracle, std::istream& in, std::ostream& out,
                  std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    const RecognitionResult result = oracle
                                         ? recognize_exhaustive(parsed.graph, oracle_cap_from_env())
                                         : recognize(parsed.graph);

    ordered_json report;
    report["verdict"] = result.yes ? "yes" : "no";
    if (result.yes) {
        report["ordering"] = result.ordering->order();
        report["intervals_x2"] = intervals_x2_json(*result.model);
    }
    report["stats"] = stats_json(result.stats, oracle);
    write_output(opts.output, out, dump_report(report));
    if (result.yes)
        err << "verdict: YES (certifying ordering and model attached)\n";
    else if (oracle)
        err << "verdict: NO (" << result.stats.orderings_examined << " orderings examined)\n";
    else
        err << "verdict: NO (" << result.stats.nodes_expanded << " nodes expanded)\n";
    return result.yes ? 0 : 1;
}

int cmd_build_model(const CommonOpts& opts, const std::string& construction, std::istream& in,
                    std::ostream& out, std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    const VertexOrdering ordering = ordering_or_identity(parsed, err);
    const IntervalModel model = construction == "thm2"
                                    ? build_model_coverage_runs(parsed.graph, ordering)
                                    : build_model_farthest_neighbor(parsed.graph, ordering);
    const ModelVerdict verdict = verify_model(parsed.graph, model);

    // Instance-format superset so the output can be fed straight back into
    // verify-model or render.
    ordered_json report =
        ordered_json::parse(serialize_instance(parsed.graph, &ordering, &model));
    report["construction"] = construction;
    report["verdict"] = verdict.ok ? "valid" : "invalid";
    if (verdict.counterexample) report["counterexample"] = counterexample_json(*verdict.counterexample);
    write_output(opts.output, out, dump_report(report));
    err << "model (" << construction << "): " << (verdict.ok ? "verifies" : "does not verify")
        << '\n';
    return verdict.ok ? 0 : 1;
}

int cmd_verify_model(const CommonOpts& opts, std::istream& in, std::ostream& out,
                     std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    if (!parsed.model) throw InputError("document carries no intervals to verify");
    const ModelVerdict verdict = verify_model(parsed.graph, *parsed.model);

    ordered_json report;
    report["verdict"] = verdict.ok ? "valid" : "invalid";
    if (verdict.counterexample) report["counterexample"] = counterexample_json(*verdict.counterexample);
    write_output(opts.output, out, dump_report(report));
    if (verdict.ok) {
        err << "model verifies against the graph\n";
    } else {
        const auto& ce = *verdict.counterexample;
        err << "model fails at pair (" << ce.u << "," << ce.v << "): "
            << (ce.failure == ModelFailure::MissingIntersection ? "missing" : "spurious")
            << " intersection\n";
    }
    return verdict.ok ? 0 : 1;
}

int cmd_annotate_matrix(const CommonOpts& opts, std::istream& in, std::ostream& out,
                        std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    const VertexOrdering ordering = ordering_or_identity(parsed, err);
    write_output(opts.output, out, annotate_matrix(parsed.graph, ordering));
    return is_r_interval_ordering(parsed.graph, ordering) ? 0 : 1;
}

int cmd_generate(const CommonOpts& opts, int n, int r, std::uint64_t seed,
                 std::optional<double> p, std::ostream& out, std::ostream& err) {
    std::string text;
    if (p) {
        const RPartiteGraph graph = random_rpartite({n, r, *p, seed});
        text = serialize_instance(graph);
        err << "generated random instance n=" << n << " r=" << r << " p=" << *p
            << " seed=" << seed << '\n';
    } else {
        const auto [graph, model] = random_interval_instance(n, r, seed);
        text = serialize_instance(graph, nullptr, &model);
        err << "generated interval instance n=" << n << " r=" << r << " seed=" << seed << '\n';
    }
    write_output(opts.output, out, text);
    return 0;
}

int cmd_cross_validate(const CommonOpts& opts, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    const CrossValidateReport cv = cross_validate(parsed.graph, oracle_cap_from_env());

    ordered_json report;
    report["verdict"] = cv.agree ? "valid" : "invalid";
    if (cv.agree) report["recognition"] = cv.search.yes ? "yes" : "no";
    report["search"] = {{"verdict", cv.search.yes ? "yes" : "no"},
                        {"stats", stats_json(cv.search.stats, false)}};
    report["oracle"] = {{"verdict", cv.oracle.yes ? "yes" : "no"},
                        {"stats", stats_json(cv.oracle.stats, true)}};
    report["threeway"] = {{"orderings_checked", cv.orderings_checked},
                          {"agreements", cv.threeway_agreements},
                          {"disagreements", cv.threeway_disagreements}};
    if (!cv.agree) report["dump"] = cv.disagreement_dump;
    write_output(opts.output, out, dump_report(report));
    if (cv.agree)
        err << "recognizers agree: " << (cv.search.yes ? "YES" : "NO") << '\n';
    else
        err << "DISAGREEMENT detected; reproducing dump attached\n";
    return cv.agree ? 0 : 1;
}

int cmd_render(const CommonOpts& opts, std::istream& in, std::ostream& out, std::ostream& err) {
    const ParsedInstance parsed = load_instance(opts.input, in, err);
    if (!parsed.model) throw InputError("document carries no intervals to render");
    write_output(opts.output, out, render_ascii(*parsed.model, parsed.graph));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"interval r-graph toolkit: ordering checks, interval models, recognition"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::size_t limit = 0;
    bool oracle = false;
    std::string construction = "thm1";
    int gen_n = 1, gen_r = 1;
    std::uint64_t gen_seed = 0;
    double gen_p = -1.0;
    bool gen_p_set = false;

    const auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", opts.input, "instance file, or - for stdin")->required();
        cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
    };

    auto* check = app.add_subcommand("check-ordering",
                                     "run the three ordering checks on the document's ordering");
    add_io(check);
    check->add_option("--limit", limit, "max pattern witnesses to list (0 = unlimited)");

    auto* rec = app.add_subcommand("recognize", "search for a certifying ordering and model");
    add_io(rec);
    rec->add_flag("--oracle", oracle, "use the exhaustive all-orderings oracle");

    auto* build = app.add_subcommand("build-model", "construct an interval model from the ordering");
    add_io(build);
    build->add_option("--construction", construction, "construction to apply (default thm1)")
        ->check(CLI::IsMember({"thm1", "thm2"}));

    auto* verify = app.add_subcommand("verify-model", "check the document's intervals against its graph");
    add_io(verify);

    auto* annotate = app.add_subcommand("annotate-matrix",
                                        "print the ordered adjacency matrix with its runs");
    add_io(annotate);

    auto* gen = app.add_subcommand("generate", "generate a random instance document");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--r", gen_r, "part count")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--p", gen_p, "edge probability; omit for a guaranteed-YES interval instance")
        ->check(CLI::Range(0.0, 1.0));
    add_io(gen, false);

    auto* cross = app.add_subcommand("cross-validate", "compare search and oracle verdicts");
    add_io(cross);

    auto* render = app.add_subcommand("render", "draw the document's intervals on a shared axis");
    add_io(render);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        gen_p_set = gen->count("--p") > 0;

        if (check->parsed()) return cmd_check_ordering(opts, limit, in, out, err);
        if (rec->parsed()) return cmd_recognize(opts, oracle, in, out, err);
        if (build->parsed()) return cmd_build_model(opts, construction, in, out, err);
        if (verify->parsed()) return cmd_verify_model(opts, in, out, err);
        if (annotate->parsed()) return cmd_annotate_matrix(opts, in, out, err);
        if (gen->parsed())
            return cmd_generate(opts, gen_n, gen_r, gen_seed,
                                gen_p_set ? std::optional<double>(gen_p) : std::nullopt, out, err);
        if (cross->parsed()) return cmd_cross_validate(opts, in, out, err);
        if (render->parsed()) return cmd_render(opts, in, out, err);
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace irg
