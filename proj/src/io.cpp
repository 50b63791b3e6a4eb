#include "irg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "irg/json_format.hpp"

namespace irg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Arrays holding only primitives (or pairs of primitives) may print inline.
bool array_is_flat(const ordered_json& a) {
    for (const auto& el : a) {
        if (el.is_object()) return false;
        if (el.is_array())
            for (const auto& sub : el)
                if (sub.is_structured()) return false;
    }
    return true;
}

// Objects of primitives and flat arrays (run entries, witnesses) likewise.
bool object_is_flat(const ordered_json& o) {
    for (const auto& el : o) {
        if (el.is_object()) return false;
        if (el.is_array() && !array_is_flat(el)) return false;
    }
    return true;
}

void write_pretty(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        if (depth > 0 && object_is_flat(j)) {
            const std::string compact = j.dump();
            if (compact.size() <= 100) {
                out += compact;
                return;
            }
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in + ordered_json(it.key()).dump() + ": ";
            write_pretty(it.value(), out, depth + 1);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (array_is_flat(j)) {
            const std::string compact = j.dump();
            if (compact.size() <= 100) {
                out += compact;
                return;
            }
        }
        out += "[\n";
        bool first = true;
        for (const auto& el : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            write_pretty(el, out, depth + 1);
        }
        out += "\n" + pad + "]";
    } else {
        out += j.dump();
    }
}

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

int get_count(const json& doc, const char* key, std::int64_t max_value) {
    if (!doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
    const auto& field = doc.at(key);
    if (!field.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    const auto value = field.get<std::int64_t>();
    if (value < 1 || value > max_value) {
        std::ostringstream msg;
        msg << "field \"" << key << "\" out of range (1.." << max_value << ")";
        bad(msg.str());
    }
    return static_cast<int>(value);
}

std::vector<int> get_int_array(const json& doc, const char* key, std::size_t expected) {
    const auto& field = doc.at(key);
    if (!field.is_array() || field.size() != expected) {
        std::ostringstream msg;
        msg << "field \"" << key << "\" must be an array of " << expected << " integers";
        bad(msg.str());
    }
    std::vector<int> values;
    values.reserve(expected);
    for (const auto& item : field) {
        if (!item.is_number_integer()) bad(std::string("non-integer entry in \"") + key + "\"");
        values.push_back(item.get<int>());
    }
    return values;
}

// Plain "intervals" entries must land exactly on the half-integer grid.
std::int64_t to_half_units(const json& value, const char* key) {
    if (value.is_number_integer()) return 2 * value.get<std::int64_t>();
    if (!value.is_number()) bad(std::string("non-numeric endpoint in \"") + key + "\"");
    const double doubled = 2.0 * value.get<double>();
    if (!std::isfinite(doubled) || std::nearbyint(doubled) != doubled)
        bad(std::string("endpoint in \"") + key + "\" is not a multiple of 0.5");
    return static_cast<std::int64_t>(doubled);
}

IntervalModel parse_intervals(const json& doc, int n) {
    const bool have_plain = doc.contains("intervals");
    const bool have_x2 = doc.contains("intervals_x2");
    const char* key = have_x2 ? "intervals_x2" : "intervals";
    const auto& field = doc.at(key);
    if (!field.is_array() || static_cast<int>(field.size()) != n)
        bad(std::string("field \"") + key + "\" must list one interval per vertex");

    IntervalModel model;
    model.intervals.reserve(field.size());
    for (const auto& pair : field) {
        if (!pair.is_array() || pair.size() != 2)
            bad(std::string("each entry of \"") + key + "\" must be a [lo, hi] pair");
        HalfIntInterval iv;
        if (have_x2) {
            if (!pair[0].is_number_integer() || !pair[1].is_number_integer())
                bad("entries of \"intervals_x2\" must be integers");
            iv = {pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()};
        } else {
            iv = {to_half_units(pair[0], key), to_half_units(pair[1], key)};
        }
        if (iv.lo2 > iv.hi2) bad("interval with lo > hi");
        model.intervals.push_back(iv);
    }

    if (have_plain && have_x2) {
        const auto& plain = doc.at("intervals");
        if (!plain.is_array() || static_cast<int>(plain.size()) != n)
            bad("field \"intervals\" must list one interval per vertex");
        for (int v = 0; v < n; ++v) {
            const auto& pair = plain[static_cast<std::size_t>(v)];
            if (!pair.is_array() || pair.size() != 2)
                bad("each entry of \"intervals\" must be a [lo, hi] pair");
            if (to_half_units(pair[0], "intervals") != model.intervals[static_cast<std::size_t>(v)].lo2 ||
                to_half_units(pair[1], "intervals") != model.intervals[static_cast<std::size_t>(v)].hi2)
                bad("fields \"intervals\" and \"intervals_x2\" disagree");
        }
    }
    return model;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) bad("malformed document: top level must be an object");

    // Desk-scale ingestion: the adjacency bit matrix is quadratic in n.
    const int n = get_count(doc, "n", 20'000);
    const int r = get_count(doc, "r", 1'000'000);
    if (!doc.contains("parts")) bad("missing field \"parts\"");
    std::vector<int> parts = get_int_array(doc, "parts", static_cast<std::size_t>(n));

    if (!doc.contains("edges") || !doc.at("edges").is_array())
        bad("missing or non-array field \"edges\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(doc.at("edges").size());
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            bad("each edge must be a [u, v] pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    // Detect duplicates before normalization eats them.
    std::vector<std::string> warnings;
    {
        std::vector<std::pair<int, int>> seen;
        seen.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u > v) std::swap(u, v);
            seen.emplace_back(u, v);
        }
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 1; i < seen.size(); ++i) {
            if (seen[i] == seen[i - 1] && (i == 1 || seen[i] != seen[i - 2])) {
                std::ostringstream msg;
                msg << "duplicate edge (" << seen[i].first << "," << seen[i].second
                    << ") deduplicated";
                warnings.push_back(msg.str());
            }
        }
    }

    ParsedInstance parsed = [&] {
        try {
            return ParsedInstance{
                RPartiteGraph::from_edges(n, r, std::move(parts), std::move(edges)),
                std::nullopt, std::nullopt, std::move(warnings)};
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
    }();

    if (doc.contains("ordering")) {
        try {
            parsed.ordering = VertexOrdering::from_order(
                get_int_array(doc, "ordering", static_cast<std::size_t>(n)));
        } catch (const std::invalid_argument& e) {
            bad(e.what());
        }
    }
    if (doc.contains("intervals") || doc.contains("intervals_x2"))
        parsed.model = parse_intervals(doc, n);
    return parsed;
}

std::string pretty_document(const ordered_json& doc) {
    std::string out;
    write_pretty(doc, out, 0);
    out += "\n";
    return out;
}

std::string serialize_instance(const RPartiteGraph& graph, const VertexOrdering* ordering,
                               const IntervalModel* model) {
    ordered_json doc;
    doc["n"] = graph.vertex_count();
    doc["r"] = graph.part_count();
    doc["parts"] = graph.parts();
    auto edges = ordered_json::array();
    for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (ordering != nullptr) doc["ordering"] = ordering->order();
    if (model != nullptr) {
        auto intervals = ordered_json::array();
        for (const auto& iv : model->intervals) intervals.push_back({iv.lo2, iv.hi2});
        doc["intervals_x2"] = std::move(intervals);
    }
    return pretty_document(doc);
}

}  // namespace irg
