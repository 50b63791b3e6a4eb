#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "irg/graph.hpp"
#include "irg/io.hpp"
#include "irg/models.hpp"
#include "irg/recognition.hpp"
#include "support.hpp"

using namespace irg;

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse_instance accepts the 3-partite example document") {
    const auto parsed = parse_instance(test::read_file(std::string(IRG_TEST_DATA_DIR) + "/fig4.json"));
    CHECK(parsed.graph == test::fig4());
    CHECK(parsed.graph.edge_count() == 13);
    CHECK(parsed.graph.part_count() == 3);
    REQUIRE(parsed.ordering.has_value());
    CHECK(*parsed.ordering == VertexOrdering::identity(10));
    CHECK(parsed.warnings.empty());
}

TEST_CASE("parse_instance handles the smallest instance") {
    const auto parsed = parse_instance(R"({"n":1,"r":1,"parts":[0],"edges":[]})");
    CHECK(parsed.graph.vertex_count() == 1);
    CHECK(parsed.graph.edge_count() == 0);
}

TEST_CASE("parse_instance rejects same-partite edges with the offending pair") {
    const std::string doc = R"({"n":3,"r":2,"parts":[0,0,1],"edges":[[0,1]]})";
    CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("same-partite edge (0,1)"),
                         ParseError);
}

TEST_CASE("parse_instance rejects out-of-range ids and parts") {
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"r":2,"parts":[0,1],"edges":[[0,5]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"r":2,"parts":[0,2],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"r":2,"parts":[0,1],"edges":[[0,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"r":1,"parts":[0],"edges":[]})"), ParseError);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"n":30000,"r":1,"parts":[],"edges":[]})"),
                         doctest::Contains("out of range"), ParseError);
}

TEST_CASE("parse_instance deduplicates duplicate edges with a warning") {
    const auto parsed =
        parse_instance(R"({"n":2,"r":2,"parts":[0,1],"edges":[[0,1],[1,0],[0,1]]})");
    CHECK(parsed.graph.edge_count() == 1);
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0] == "duplicate edge (0,1) deduplicated");
}

TEST_CASE("parse_instance reads plain intervals on the half grid only") {
    const auto parsed = parse_instance(
        R"({"n":2,"r":2,"parts":[0,1],"edges":[[0,1]],"intervals":[[1,3.5],[2.0,4]]})");
    REQUIRE(parsed.model.has_value());
    CHECK(parsed.model->intervals[0] == HalfIntInterval{2, 7});
    CHECK(parsed.model->intervals[1] == HalfIntInterval{4, 8});
    CHECK_THROWS_AS(parse_instance(
                        R"({"n":1,"r":1,"parts":[0],"edges":[],"intervals":[[1,1.25]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(
                        R"({"n":1,"r":1,"parts":[0],"edges":[],"intervals_x2":[[4,2]]})"),
                    ParseError);
}

TEST_CASE("serialize/parse round-trips instances bit-exactly") {
    const auto [graph, model] = random_interval_instance(9, 3, 123);
    const VertexOrdering ordering = ordering_from_model(model);
    const std::string text = serialize_instance(graph, &ordering, &model);
    const auto parsed = parse_instance(text);
    CHECK(parsed.graph == graph);
    CHECK(*parsed.ordering == ordering);
    CHECK(*parsed.model == model);
    CHECK(serialize_instance(parsed.graph, &*parsed.ordering, &*parsed.model) == text);
}

TEST_CASE("random_rpartite honors the degenerate probabilities") {
    const RPartiteGraph empty = random_rpartite({6, 2, 0.0, 99});
    CHECK(empty.edge_count() == 0);

    const RPartiteGraph full = random_rpartite({6, 3, 1.0, 99});
    std::size_t cross = 0;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (full.part_of(u) != full.part_of(v)) ++cross;
    CHECK(full.edge_count() == cross);
}

TEST_CASE("random_rpartite is deterministic per seed") {
    const RPartiteGraph a = random_rpartite({8, 3, 0.4, 42});
    const RPartiteGraph b = random_rpartite({8, 3, 0.4, 42});
    CHECK(a == b);
    const RPartiteGraph c = random_rpartite({8, 3, 0.4, 43});
    CHECK(a.parts() != c.parts());  // near-certain for distinct seeds
}

TEST_CASE("random_rpartite validates its spec") {
    CHECK_THROWS_AS(random_rpartite({0, 1, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(random_rpartite({1, 0, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(random_rpartite({1, 1, 1.5, 1}), std::invalid_argument);
}

TEST_CASE("random_interval_instance matches its own model, 100 seeds per shape") {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= 4; ++r) {
            int good = 0;
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const auto [graph, model] = random_interval_instance(n, r, seed);
                // Edge set equals the cross-part intersecting pairs, both ways.
                if (verify_model(graph, model).ok &&
                    graph == test::graph_from_intervals(graph.parts(), r, model))
                    ++good;
            }
            CHECK(good == 100);
        }
}

TEST_CASE("random_interval_instance single vertex") {
    const auto [graph, model] = random_interval_instance(1, 1, 5);
    CHECK(graph.vertex_count() == 1);
    CHECK(graph.edge_count() == 0);
    CHECK(model.size() == 1);
    CHECK(model.intervals[0].lo2 <= model.intervals[0].hi2);
}

TEST_CASE("named generator instances are guaranteed YES") {
    const auto [g1, m1] = random_interval_instance(5, 2, 7);
    CHECK(verify_model(g1, m1).ok);
    CHECK(recognize(g1).yes);

    const auto [g2, m2] = random_interval_instance(9, 4, 11);
    CHECK(recognize(g2).yes == recognize_exhaustive(g2).yes);
}

TEST_CASE("adjacency_matrix reproduces the example matrix") {
    const RPartiteGraph g = test::fig4();
    const auto m = adjacency_matrix(g, VertexOrdering::identity(10));
    const char* expected[] = {
        "0110000000", "1011000000", "1100000000", "0100010000", "0000010100",
        "0001101110", "0000010110", "0000111001", "0000011000", "0000000100",
    };
    for (int p = 0; p < 10; ++p)
        for (int q = 0; q < 10; ++q)
            CHECK(m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] ==
                  (expected[p][q] == '1'));
}

TEST_CASE("adjacency_matrix rejects a mismatched ordering") {
    CHECK_THROWS_AS(adjacency_matrix(test::fig4(), VertexOrdering::identity(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(VertexOrdering::from_order({0, 0, 2}), std::invalid_argument);
}

TEST_CASE("adjacency_matrix of an edgeless graph is zero") {
    const RPartiteGraph g = RPartiteGraph::from_edges(4, 2, {0, 1, 0, 1}, {});
    const auto m = adjacency_matrix(g, VertexOrdering::identity(4));
    for (const auto& row : m)
        for (bool cell : row) CHECK_FALSE(cell);
}

TEST_CASE("adjacency_matrix of a complete 3-partite triangle") {
    const RPartiteGraph g = RPartiteGraph::from_edges(3, 3, {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
    const auto m = adjacency_matrix(g, VertexOrdering::identity(3));
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            CHECK(m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] == (p != q));
}

TEST_CASE("relabeling commutes with adjacency_matrix") {
    std::mt19937_64 rng(7);
    const RPartiteGraph g = random_rpartite({7, 3, 0.5, 77});
    for (int rep = 0; rep < 20; ++rep) {
        const VertexOrdering sigma = test::random_ordering(7, rng);
        const VertexOrdering tau = test::random_ordering(7, rng);
        // composed ordering: position p holds sigma(tau(p)).
        std::vector<int> composed(7);
        for (int p = 0; p < 7; ++p) composed[static_cast<std::size_t>(p)] = sigma.vertex_at(tau.vertex_at(p));
        const auto lhs = adjacency_matrix(g, VertexOrdering::from_order(composed));
        const auto rhs = adjacency_matrix(g, sigma);
        for (int p = 0; p < 7; ++p)
            for (int q = 0; q < 7; ++q)
                CHECK(lhs[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] ==
                      rhs[static_cast<std::size_t>(tau.vertex_at(p))]
                         [static_cast<std::size_t>(tau.vertex_at(q))]);
    }
}

TEST_CASE("induced_subgraph keeps parts and restricts edges") {
    const RPartiteGraph g = test::fig4();
    const RPartiteGraph h = induced_subgraph(g, {0, 1, 2, 3, 4, 5, 6});
    CHECK(h.vertex_count() == 7);
    CHECK(h.part_count() == 3);
    CHECK(h.edge_count() == 7);  // edges among v1..v7
    CHECK(h.adjacent(0, 1));
    CHECK_FALSE(h.adjacent(0, 3));
    CHECK_THROWS_AS(induced_subgraph(g, {3, 1}), std::invalid_argument);
}

TEST_CASE("generated and parsed graphs satisfy the validator") {
    // from_edges is the validator; rebuilding from accessors must succeed
    // and reproduce the same graph.
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 25; ++rep) {
        const RPartiteGraph g = random_rpartite(
            {static_cast<int>(rng() % 10 + 1), static_cast<int>(rng() % 4 + 1),
             static_cast<double>(rng() % 100) / 100.0, rng()});
        const RPartiteGraph rebuilt =
            RPartiteGraph::from_edges(g.vertex_count(), g.part_count(), g.parts(), g.edges());
        CHECK(g == rebuilt);
        for (const auto& [u, v] : g.edges()) {
            CHECK(g.adjacent(u, v));
            CHECK(g.adjacent(v, u));
            CHECK(g.part_of(u) != g.part_of(v));
        }
        for (int v = 0; v < g.vertex_count(); ++v) CHECK_FALSE(g.adjacent(v, v));
    }
}

TEST_SUITE_END();
