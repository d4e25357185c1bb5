#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "lmss/corpus.hpp"
#include "lmss/fuzz.hpp"
#include "lmss/generator.hpp"
#include "lmss/matching.hpp"

using namespace lmss;

TEST_SUITE("harness") {

TEST_CASE("seed derivation is frozen") {
    CHECK(mix64(0) == 0u);
    CHECK(instance_seed(1, 0) == 10451216379200822465ull);
    CHECK(instance_seed(1, 1) == 13757245211066428519ull);
    CHECK(instance_seed(42, 7) == 14769051326987775908ull);
}

TEST_CASE("draw_below stays in range and covers it") {
    std::mt19937_64 rng(5);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        auto x = draw_below(rng, 7);
        REQUIRE(x < 7);
        ++hits[x];
    }
    for (int h : hits) CHECK(h > 800);
}

TEST_CASE("generator examples") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = generate_random_unicycle({3, 3, Parity::three, seed, true});
        CHECK(g.order() == 3);
        CHECK(g.edge_count() == 3);
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto f = generate_random_unicycle({10, std::nullopt, Parity::any, seed, seed % 2 == 0});
        CHECK(f.order() == 10);
        CHECK(is_forest(f));
        if (seed % 2 == 0) CHECK(components(f, f.vertices()).size() == 1);
    }
    GeneratorSpec spec{12, 5, Parity::odd, 42, true};
    auto a = generate_random_unicycle(spec);
    auto b = generate_random_unicycle(spec);
    CHECK(unique_cycle(a).length == 5);
    CHECK(a == b);
    CHECK(to_edge_list(a) == to_edge_list(b));
    CHECK(components(a, a.vertices()).size() == 1);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::size_t k = 3 + seed % 6;
        auto g = generate_random_unicycle({k + seed % 7, k, Parity::any, seed, false});
        CHECK(unique_cycle(g).length == k);
        CHECK(g.order() == k + seed % 7);
    }
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(validate({5, 6, Parity::any, 0, true}), DomainError);
    CHECK_THROWS_AS(validate({5, 2, Parity::any, 0, true}), DomainError);
    CHECK_THROWS_AS(validate({6, 4, Parity::odd, 0, true}), DomainError);
    CHECK_THROWS_AS(validate({6, 5, Parity::even, 0, true}), DomainError);
    CHECK_THROWS_AS(validate({6, 4, Parity::three, 0, true}), DomainError);
    CHECK_NOTHROW(validate({6, 4, Parity::even, 0, true}));
    CHECK_NOTHROW(validate({0, std::nullopt, Parity::any, 0, true}));
    CHECK_THROWS_AS(generate_random_unicycle({2, 3, Parity::any, 0, true}), DomainError);
}

TEST_CASE("corpus") {
    CHECK(corpus_names().size() == 6);
    auto f1 = corpus("fig1");
    CHECK(f1.order() == 8);
    CHECK(f1.edge_count() == 8);
    CHECK(unique_cycle(f1).length == 5);
    auto f4 = corpus("fig4_G1");
    CHECK(f4.order() == 6);
    CHECK(unique_cycle(f4).length == 5);
    CHECK(is_triangle_free(f4));
    CHECK_FALSE(is_bipartite(f4));
    CHECK(unique_cycle(corpus("fig2_G2")).length == 3);
    CHECK(corpus("fig3").edge_count() == 7);
    CHECK_THROWS_AS(corpus("fig5"), DomainError);
}

TEST_CASE("family names") {
    for (auto f : {Family::forest, Family::three, Family::even, Family::odd, Family::any})
        CHECK(family_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(family_from_string("square"), DomainError);
}

TEST_CASE("instance specs respect the campaign") {
    Campaign c;
    c.count = 200;
    c.min_n = 4;
    c.max_n = 11;
    c.max_cycle = 7;
    c.family = Family::even;
    for (std::size_t i = 0; i < c.count; ++i) {
        auto s = instance_spec(c, i);
        CHECK(s.vertex_count >= 4);
        CHECK(s.vertex_count <= 11);
        REQUIRE(s.cycle_length.has_value());
        CHECK(*s.cycle_length % 2 == 0);
        CHECK(*s.cycle_length <= std::min<std::size_t>(7, s.vertex_count));
        CHECK(instance_spec(c, i).seed == s.seed);
        CHECK(s.connected);
    }
}

TEST_CASE("parallel fuzz matches the serial reference byte for byte") {
    Campaign c;
    c.count = 48;
    c.max_n = 11;
    c.seed = 99;
    c.disconnected = true;
    std::ostringstream par, ser, again;
    write_reports(par, c, run_fuzz(c), false);
    write_reports(ser, c, run_fuzz_serial(c), false);
    write_reports(again, c, run_fuzz(c), false);
    CHECK(par.str() == ser.str());
    CHECK(par.str() == again.str());
    // one line per instance plus the summary
    const std::string text = par.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 49);
}

TEST_CASE("campaigns by family") {
    auto run = [](Family f) {
        Campaign c;
        c.count = 100;
        c.max_n = 12;
        c.family = f;
        c.seed = 2024;
        return run_fuzz(c);
    };

    auto forests = run(Family::forest);
    auto sf = summarize(forests);
    CHECK(sf.ok());
    CHECK(sf.count == 100);
    CHECK(sf.greedoids == 100);
    CHECK(sf.chains_checked > 0);

    auto tri = run(Family::three);
    auto st = summarize(tri);
    CHECK(st.ok());
    CHECK(st.greedoids == 100);
    CHECK(st.chain_failures == 0);
    CHECK(st.chains_checked > 0);

    auto even = run(Family::even);
    auto se = summarize(even);
    CHECK(se.ok());
    CHECK(se.disagreements == 0);
    for (const auto& r : even) {
        REQUIRE(r.verdicts.has_value());
        CHECK(r.verdicts->classifier.is_greedoid == all_max_matchings_ur(r.graph).all_uniquely_restricted);
    }

    auto odd = run(Family::odd);
    auto so = summarize(odd);
    CHECK(so.ok());
    CHECK(so.odd_ur_failures == 0);
}

}  // TEST_SUITE
