#include "doctest.h"

#include "helpers.hpp"
#include "lmss/corpus.hpp"
#include "lmss/generator.hpp"
#include "lmss/matching.hpp"
#include "oracle.hpp"

using namespace lmss;

namespace {

Matching from_oracle(const Graph& g, const oracle::EdgeList& m) {
    return Matching(g, std::vector<Edge>(m.begin(), m.end()));
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("Matching validates and canonicalises") {
    auto fig3 = corpus("fig3");
    auto m = Matching::from_labels(fig3, {{"g", "f"}, {"b", "a"}, {"e", "d"}});
    std::vector<std::pair<std::string, std::string>> seen;
    for (auto [u, v] : m.edges()) seen.emplace_back(fig3.label(u), fig3.label(v));
    CHECK(seen == std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"d", "e"}, {"f", "g"}});
    CHECK(m.saturated() == testing::set(fig3, {"a", "b", "d", "e", "f", "g"}));
    CHECK_THROWS_AS(Matching::from_labels(fig3, {{"a", "c"}}), DomainError);
    CHECK_THROWS_AS(Matching::from_labels(fig3, {{"a", "b"}, {"b", "d"}}), DomainError);
}

TEST_CASE("matching_number") {
    CHECK(matching_number(testing::cycle(5)) == 2);
    CHECK(matching_number(corpus("fig3")) == 3);
    CHECK(matching_number(corpus("fig4_G2")) == 4);
    CHECK(matching_number(Graph()) == 0);
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto g = generate_random_graph(1 + seed % 10, 0.1 + 0.06 * static_cast<double>(seed % 8), seed);
        CHECK(matching_number(g) == oracle::mu(g));
    }
}

TEST_CASE("maximum_matchings") {
    auto edge = testing::graph("u v");
    auto one = maximum_matchings(edge);
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 1);
    CHECK(maximum_matchings(testing::cycle(4)).size() == 2);

    auto g2 = corpus("fig4_G2");
    auto mm = maximum_matchings(g2);
    CHECK(mm.size() == 1);
    CHECK(mm[0].size() == 4);
    CHECK(count_perfect_matchings(g2, g2.vertices(), 10) == 1);

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = generate_random_graph(1 + seed % 9, 0.35, 500 + seed);
        const auto mu = oracle::mu(g);
        std::size_t expected = 0;
        for (const auto& m : oracle::matchings(g)) expected += m.size() == mu;
        auto got = maximum_matchings(g);
        CHECK(got.size() == expected);
        for (const auto& m : got) CHECK(m.size() == mu);
    }
}

TEST_CASE("uniquely restricted: alternating-cycle search") {
    auto fig3 = corpus("fig3");
    auto m = Matching::from_labels(fig3, {{"a", "b"}, {"d", "e"}, {"f", "g"}});
    auto cycle = find_alternating_cycle(fig3, m);
    REQUIRE(cycle.has_value());
    std::vector<std::string> on;
    for (auto v : *cycle) on.push_back(fig3.label(v));
    std::sort(on.begin(), on.end());
    CHECK(on == std::vector<std::string>{"d", "e", "f", "g"});
    CHECK_FALSE(is_uniquely_restricted(fig3, m));

    CHECK(is_uniquely_restricted(fig3, Matching()));

    auto g1 = corpus("fig2_G1");
    auto m1 = Matching::from_labels(g1, {{"x", "b"}, {"c", "y"}, {"z", "d"}});
    CHECK_FALSE(is_uniquely_restricted(g1, m1));
    CHECK(count_perfect_matchings(g1, m1.saturated(), 10) == 2);

    // A matching built for another graph is rejected.
    CHECK_THROWS_AS(is_uniquely_restricted(testing::path(2), m), DomainError);
}

TEST_CASE("uniquely restricted: perfect-matching counting oracle") {
    auto fig3 = corpus("fig3");
    auto m = Matching::from_labels(fig3, {{"a", "b"}, {"d", "e"}, {"f", "g"}});
    CHECK_FALSE(is_uniquely_restricted_oracle(fig3, m));

    auto p4 = testing::path(4);
    auto pm = Matching::from_labels(p4, {{"1", "2"}, {"3", "4"}});
    CHECK(is_uniquely_restricted_oracle(p4, pm));
    CHECK(is_uniquely_restricted(p4, pm));

    auto c6 = testing::cycle(6);
    for (const auto& pmc : maximum_matchings(c6)) {
        CHECK(pmc.size() == 3);
        CHECK_FALSE(is_uniquely_restricted_oracle(c6, pmc));
        CHECK_FALSE(is_uniquely_restricted(c6, pmc));
    }
}

TEST_CASE("both uniquely-restricted tests agree on every matching; witnesses alternate and are even") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto g = generate_random_graph(2 + seed % 8, 0.25 + 0.05 * static_cast<double>(seed % 6), 900 + seed);
        for (const auto& raw : oracle::matchings(g)) {
            auto m = from_oracle(g, raw);
            auto cycle = find_alternating_cycle(g, m);
            bool oracle_ur = oracle::perfect_matchings(g, oracle::saturated(raw)) == 1;
            CHECK(!cycle.has_value() == oracle_ur);
            CHECK(is_uniquely_restricted_oracle(g, m) == oracle_ur);
            if (!cycle) continue;
            CHECK(cycle->size() % 2 == 0);
            auto matched = [&](Vertex a, Vertex b) {
                return std::any_of(m.edges().begin(), m.edges().end(), [&](Edge e) {
                    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
                });
            };
            for (std::size_t i = 0; i < cycle->size(); ++i) {
                Vertex a = (*cycle)[i], b = (*cycle)[(i + 1) % cycle->size()];
                CHECK(g.adjacent(a, b));
                CHECK(matched(a, b) == (i % 2 == 0));
            }
        }
    }
}

TEST_CASE("all_max_matchings_ur") {
    auto fig3 = corpus("fig3");
    auto r = all_max_matchings_ur(fig3);
    CHECK_FALSE(r.all_uniquely_restricted);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(is_uniquely_restricted_oracle(fig3, *r.witness));
    CHECK(r.failures.empty());

    auto all = all_max_matchings_ur(fig3, {}, true);
    CHECK(all.witness == r.witness);
    CHECK(all.failures.size() >= 1);
    for (const auto& m : all.failures) CHECK_FALSE(is_uniquely_restricted(fig3, m));

    CHECK(all_max_matchings_ur(testing::graph("u v")).all_uniquely_restricted);
    CHECK(all_max_matchings_ur(corpus("fig4_G1")).all_uniquely_restricted);
}

TEST_CASE("graphs whose only cycle is odd have only uniquely restricted maximum matchings") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t k = 3 + 2 * (seed % 4);
        auto g = generate_random_unicycle({k + seed % 6, k, Parity::any, seed, seed % 4 != 0});
        CHECK(all_max_matchings_ur(g).all_uniquely_restricted);
    }
}

TEST_CASE("König-Egerváry") {
    CHECK_FALSE(is_konig_egervary(testing::cycle(5)));
    auto g1 = corpus("fig4_G1");
    CHECK(is_konig_egervary(g1));
    CHECK(is_konig_egervary(corpus("fig4_G2")));
    auto c5 = induced_subgraph(g1, closed_neighborhood(g1, testing::set(g1, {"u", "v"})));
    CHECK_FALSE(is_konig_egervary(c5));
    // The two-vertex edgeless graph G1[{u,v}] is König-Egerváry; the failing
    // object is the closed neighbourhood.
    CHECK(is_konig_egervary(induced_subgraph(g1, testing::set(g1, {"u", "v"}))));
}

TEST_CASE("bipartite graphs are König-Egerváry") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto g = generate_random_graph(2 + seed % 11, 0.3, 4000 + seed);
        if (!is_bipartite(g)) continue;
        CHECK(is_konig_egervary(g));
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = generate_random_unicycle({12, 4 + 2 * (seed % 4), Parity::even, seed, true});
        CHECK(is_konig_egervary(g));
    }
}

}  // TEST_SUITE
