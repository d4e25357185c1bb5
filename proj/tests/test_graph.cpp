#include "doctest.h"

#include "helpers.hpp"
#include "lmss/corpus.hpp"
#include "lmss/generator.hpp"
#include "lmss/graph.hpp"
#include "lmss/graph_io.hpp"
#include "oracle.hpp"

using namespace lmss;
using testing::graph;
using testing::set;

TEST_SUITE("graph_core") {

TEST_CASE("parse_edge_list builds vertices in first-appearance order") {
    auto g = graph("a b\nb c");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.adjacent(g.index("a"), g.index("b")));
    CHECK_FALSE(g.adjacent(g.index("a"), g.index("c")));
}

TEST_CASE("parse_edge_list handles comments, blank lines and isolated vertices") {
    auto g = graph("# header\n\n  z  \na b # trailing\n\tb\tc\n");
    CHECK(g.labels() == std::vector<std::string>{"z", "a", "b", "c"});
    CHECK(g.degree(g.index("z")) == 0);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_edge_list rejects self-loops, duplicates and long lines with line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK_THROWS_AS(parse_edge_list("a a"), ParseError);
    CHECK(line_of("a a") == 1);
    CHECK(line_of("a b\nb c\nc b\n") == 3);
    CHECK(line_of("a b\n\nx y z\n") == 3);
    CHECK_THROWS_WITH_AS(parse_edge_list("a b\nb a"), doctest::Contains("duplicate edge"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("q q"), doctest::Contains("self-loop"), ParseError);
}

TEST_CASE("fig3 edge-list document") {
    auto g = graph("a b\nb d\nd f\nc e\ne g\nd e\nf g\n");
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 7);
    CHECK(g == corpus("fig3"));
}

TEST_CASE("Graph constructor enforces the simple-graph invariants") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), DomainError);
    CHECK_THROWS_AS(Graph({"a b"}, {}), DomainError);
    CHECK_THROWS_AS(Graph({""}, {}), DomainError);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), DomainError);
    std::vector<std::string> many;
    for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(Graph(many, {}), DomainError);
}

TEST_CASE("adjacency is symmetric") {
    for (const auto& name : corpus_names()) {
        auto g = corpus(name);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

TEST_CASE("closed_neighborhood") {
    auto fig1 = corpus("fig1");
    CHECK(fig1.labels_of(closed_neighborhood(fig1, set(fig1, {"e", "g"}))) ==
          std::vector<std::string>{"c", "d", "e", "g", "h"});
    CHECK(closed_neighborhood(fig1, {}).empty());
    CHECK(neighborhood(fig1, set(fig1, {"e", "g"})) == set(fig1, {"c", "d", "h"}));

    auto g1 = corpus("fig4_G1");
    CHECK(closed_neighborhood(g1, set(g1, {"u", "v"})) == set(g1, {"u", "v", "w2", "w3", "w4"}));

    CHECK_THROWS_AS(closed_neighborhood(g1, VertexSet::single(40)), DomainError);
    CHECK_THROWS_AS(induced_subgraph(g1, VertexSet::single(6)), DomainError);
}

TEST_CASE("neighbourhood properties against a brute-force scan") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = generate_random_graph(9, 0.35, seed);
        for (Mask bits = 0; bits < (Mask{1} << g.order()); bits += 7) {
            VertexSet s(bits);
            auto closed = closed_neighborhood(g, s);
            CHECK(s.subset_of(closed));
            CHECK_FALSE(neighborhood(g, s).intersects(s));
            CHECK(closed.bits() == oracle::closed_nbhd(g, bits));
        }
    }
}

TEST_CASE("induced_subgraph") {
    auto g1 = corpus("fig4_G1");
    auto c5 = induced_subgraph(g1, closed_neighborhood(g1, set(g1, {"u", "v"})));
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(unique_cycle(c5).length == 5);
    for (Vertex v = 0; v < c5.order(); ++v) CHECK(c5.degree(v) == 2);

    auto fig3 = corpus("fig3");
    auto c4 = induced_subgraph(fig3, set(fig3, {"d", "e", "f", "g"}));
    CHECK(c4.edge_count() == 4);
    auto info = unique_cycle(c4);
    CHECK(info.length == 4);
    CHECK(c4.labels_of(VertexSet{info.vertices[0]}) == std::vector<std::string>{"d"});

    CHECK(induced_subgraph(fig3, fig3.vertices()) == fig3);
}

TEST_CASE("unique_cycle") {
    auto g2 = corpus("fig2_G2");
    auto tri = unique_cycle(g2);
    CHECK(tri.length == 3);
    CHECK(tri.parity == CycleParity::three);

    auto fig3 = corpus("fig3");
    auto c = unique_cycle(fig3);
    CHECK(c.length == 4);
    CHECK(c.parity == CycleParity::even);
    std::vector<std::string> order;
    for (auto v : c.vertices) order.push_back(fig3.label(v));
    // Starts at the least label and heads toward its smaller cycle neighbour.
    CHECK(order == std::vector<std::string>{"d", "e", "g", "f"});

    try {
        unique_cycle(testing::path(4));
        FAIL("expected a forest error");
    } catch (const CycleError& e) {
        CHECK(e.kind() == CycleError::Kind::forest);
    }
    try {
        unique_cycle(graph("a b\nb c\nc a\nc d\nd e\ne c\n"));
        FAIL("expected a not-unicycle error");
    } catch (const CycleError& e) {
        CHECK(e.kind() == CycleError::Kind::not_unicycle);
    }
    // A cycle plus a disconnected tree is still unicycle.
    auto split = graph("a b\nb c\nc a\nx y\ny z\n");
    CHECK(unique_cycle(split).length == 3);
    // Two components can hide a second cycle even when |E| = |V|.
    CHECK_THROWS_AS(unique_cycle(graph("a b\nb c\nc a\nx y\ny z\nz x\nq\n")), CycleError);
}

TEST_CASE("structural predicates") {
    auto fig3 = corpus("fig3");
    CHECK(is_bipartite(fig3));
    CHECK_FALSE(is_forest(fig3));

    auto g1 = corpus("fig4_G1");
    CHECK_FALSE(is_bipartite(g1));
    CHECK(is_triangle_free(g1));

    auto k3 = graph("x y\ny z\nz x");
    CHECK(simplicial_vertices(k3) == k3.vertices());
    CHECK_FALSE(is_triangle_free(k3));
    CHECK(pendant_vertices(k3).empty());

    auto p4 = testing::path(4);
    CHECK(is_forest(p4));
    CHECK(pendant_vertices(p4) == set(p4, {"1", "4"}));
    CHECK(simplicial_vertices(p4) == set(p4, {"1", "4"}));
    CHECK(is_forest(Graph()));
}

TEST_CASE("generated unicycle graphs: parity matches bipartiteness, edge count characterises one cycle") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(seed);
        std::size_t n = 3 + draw_below(rng, 12);
        std::size_t k = 3 + draw_below(rng, n - 2);
        bool connected = seed % 3 != 0;
        auto g = generate_random_unicycle({n, k, Parity::any, seed, connected});
        auto info = unique_cycle(g);
        CHECK(info.length == k);
        CHECK(is_bipartite(g) == (k % 2 == 0));
        CHECK(g.edge_count() + components(g).size() == g.order() + 1);
        CHECK(pendant_vertices(g).subset_of(simplicial_vertices(g)));
        for (std::size_t i = 0; i < info.length; ++i)
            CHECK(g.adjacent(info.vertices[i], info.vertices[(i + 1) % info.length]));
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = generate_random_graph(8, 0.3, seed);
        const auto comps = components(g).size();
        bool one_cycle = g.edge_count() + comps == g.order() + 1 && !is_forest(g);
        bool ok = true;
        try {
            unique_cycle(g);
        } catch (const CycleError&) {
            ok = false;
        }
        CHECK(ok == one_cycle);
        CHECK(pendant_vertices(g).subset_of(simplicial_vertices(g)));
    }
}

TEST_CASE("serialization round-trips") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = generate_random_graph(1 + seed % 12, 0.3, seed);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
        CHECK(parse_graph_json(to_graph_json(g)) == g);
    }
}

TEST_CASE("JSON input errors") {
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a"], "edges": [["a", "b"]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a"], "edges": [["a", "a"]]})"), ParseError);
    auto g = parse_graph_json(R"({"vertices": ["b", "a"], "edges": [["a", "b"]]})");
    CHECK(g.labels() == std::vector<std::string>{"b", "a"});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("DOT export") {
    auto g = graph("b a\nc\n");
    CHECK(to_dot(g) == "graph G {\n  \"c\";\n  \"a\" -- \"b\";\n}\n");
}

TEST_CASE("canonical order is lexicographic on labels") {
    auto g = graph("c a\nb a\n");
    CHECK(g.labels() == std::vector<std::string>{"c", "a", "b"});
    CHECK(g.labels_of(g.vertices()) == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.canonical_less(set(g, {"c"}), set(g, {"a", "b"})));
    CHECK(g.canonical_less(set(g, {"a", "c"}), set(g, {"b", "c"})));
    CHECK_FALSE(g.canonical_less(set(g, {"b", "c"}), set(g, {"a", "c"})));
    CHECK_THROWS_AS(g.index("zz"), DomainError);
}

}  // TEST_SUITE
