#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "mcst/error.hpp"
#include "mcst/generator.hpp"
#include "mcst/json_io.hpp"
#include "mcst/rng.hpp"

using namespace mcst;

TEST_CASE("E1 validates") {
    Instance inst = fixtures::e1();
    CHECK(inst.graph.node_count() == 3);
    CHECK(inst.graph.edge_count() == 3);
    CHECK(inst.chain.size() == 1);
    CHECK(inst.chain.set(0).bound == 1);
}

TEST_CASE("non-nested chain is rejected with all violations collected") {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)},
                 {"e13", "v1", "v3", Rational(1)},
                 {"e23", "v2", "v3", Rational(1)}};
    raw.chain = {{{"v1"}, 1}, {{"v2"}, 1}};
    try {
        validate_instance(raw);
        FAIL("expected VALIDATION_FAILED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationFailed);
        bool mentions_nesting = false;
        for (const auto& d : e.details())
            if (d.find("nested") != std::string::npos) mentions_nesting = true;
        CHECK(mentions_nesting);
    }
}

TEST_CASE("lambda must exceed 1") {
    RawInstance raw;
    raw.nodes = {"v1", "v2"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)}};
    raw.lambda = Rational(1);
    CHECK_THROWS_AS(validate_instance(raw), Error);
}

TEST_CASE("several violations are reported at once") {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)}};  // disconnected: v3 isolated
    raw.chain = {{{"v1"}, 0}};                       // bound below 1
    raw.lambda = make_rational(1, 2);                // lambda <= 1
    try {
        validate_instance(raw);
        FAIL("expected VALIDATION_FAILED");
    } catch (const Error& e) {
        CHECK(e.details().size() >= 3);
    }
}

TEST_CASE("self-loops and duplicate identifiers are rejected") {
    RawInstance raw;
    raw.nodes = {"v1", "v2"};
    raw.edges = {{"e1", "v1", "v1", Rational(1)}, {"e1", "v1", "v2", Rational(1)}};
    CHECK_THROWS_AS(validate_instance(raw), Error);
}

TEST_CASE("chain_sets_crossed on the fixtures") {
    Instance inst = fixtures::e1();
    CHECK(chain_sets_crossed(inst.graph, inst.chain, "e12") == std::vector<std::size_t>{0});
    CHECK(chain_sets_crossed(inst.graph, inst.chain, "e23").empty());
    CHECK_THROWS_AS(chain_sets_crossed(inst.graph, inst.chain, "nope"), Error);

    Instance c4 = fixtures::e3();
    CHECK(chain_sets_crossed(c4.graph, c4.chain, "e14") == std::vector<std::size_t>{0, 1});
}

TEST_CASE("crossed chain sets form a contiguous interval of indices") {
    // random chains: nesting forces the crossed indices to be an interval
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng.below(4));
        RawInstance raw;
        for (int i = 1; i <= n; ++i) raw.nodes.push_back("v" + std::to_string(i));
        for (int i = 1; i < n; ++i)
            raw.edges.push_back(RawEdge{"e" + std::to_string(i), raw.nodes[0],
                                        raw.nodes[static_cast<std::size_t>(i)], Rational(1)});
        for (int s = 1; s < n; ++s) {
            RawChainSet cs;
            for (int i = 0; i < s; ++i) cs.nodes.push_back(raw.nodes[static_cast<std::size_t>(i)]);
            cs.bound = 1 + static_cast<long>(rng.below(3));
            raw.chain.push_back(std::move(cs));
        }
        Instance inst = validate_instance(raw);
        for (int e = 0; e < inst.graph.edge_count(); ++e) {
            auto crossed = chain_sets_crossed(inst.graph, inst.chain, e);
            for (std::size_t i = 1; i < crossed.size(); ++i)
                CHECK(crossed[i] == crossed[i - 1] + 1);
        }
    }
}

TEST_CASE("cut_value on E1") {
    Instance inst = fixtures::e1();
    NodeMask s1 = inst.graph.mask_of({"v1"});
    std::vector<Rational> x = {Rational(1), Rational(0), Rational(1)};
    CHECK(cut_value(inst.graph, x, s1) == 1);
    CHECK(cut_value(inst.graph, x, inst.graph.full_mask()) == 0);
    std::vector<Rational> frac = {make_rational(1, 2), make_rational(1, 2), Rational(1)};
    CHECK(cut_value(inst.graph, frac, s1) == 1);
}

TEST_CASE("cut_value is additive over edge-disjoint supports") {
    Instance inst = fixtures::e3();
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> a(4, Rational(0)), b(4, Rational(0)), sum(4, Rational(0));
        for (std::size_t e = 0; e < 4; ++e) {
            Rational value = make_rational(static_cast<long>(rng.below(5)), 4);
            if (rng.below(2) == 0)
                a[e] = value;
            else
                b[e] = value;
            sum[e] = a[e] + b[e];
        }
        for (NodeMask set = 1; set < inst.graph.full_mask(); ++set)
            CHECK(cut_value(inst.graph, sum, set) ==
                  cut_value(inst.graph, a, set) + cut_value(inst.graph, b, set));
    }
}

TEST_CASE("serialization round-trips exactly") {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3"};
    raw.edges = {{"e12", "v1", "v2", make_rational(1, 3)},
                 {"e13", "v1", "v3", make_rational(7, 2)},
                 {"e23", "v2", "v3", Rational(4)}};
    raw.chain = {{{"v1"}, 2}};
    Instance inst = validate_instance(raw);

    Json doc = instance_to_json(inst);
    RawInstance parsed = instance_from_json(doc);
    parsed.lambda = inst.lambda;
    Instance round = validate_instance(parsed);
    CHECK(round == inst);
}

TEST_CASE("serialization round-trips over the random corpus") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.nodes = 4 + static_cast<int>(seed % 7);
        cfg.extra_edges = static_cast<int>(seed % 5);
        cfg.chain_sets = 1 + static_cast<int>(seed % 4);
        Instance inst = generate_instance(cfg);
        RawInstance parsed = instance_from_json(instance_to_json(inst));
        parsed.lambda = inst.lambda;
        CHECK(validate_instance(parsed) == inst);
    }
}

TEST_CASE("points parsed from JSON reject unknown edges") {
    Instance inst = fixtures::e1();
    Json doc = {{"nope", 1}};
    CHECK_THROWS_AS(point_from_json(inst.graph, doc), Error);
    Json partial = {{"e13", "1/2"}};
    auto p = point_from_json(inst.graph, partial);
    CHECK(p.values == std::vector<Rational>{Rational(0), make_rational(1, 2), Rational(0)});
}

TEST_CASE("rational JSON forms parse exactly") {
    CHECK(rational_from_json(Json(3)) == 3);
    CHECK(rational_from_json(Json("2.5")) == make_rational(5, 2));
    CHECK(rational_from_json(Json("-0.125")) == make_rational(-1, 8));
    CHECK(rational_from_json(Json("7/3")) == make_rational(7, 3));
    Json obj = {{"num", 10}, {"den", 4}};
    CHECK(rational_from_json(obj) == make_rational(5, 2));
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), Error);  // inexact literal
}

TEST_CASE("unit-box point validation") {
    Instance inst = fixtures::e1();
    CHECK_THROWS_AS(point_in_unit_box(inst.graph, {Rational(2), Rational(0), Rational(0)}), Error);
    auto p = point_in_unit_box(inst.graph, {Rational(1), Rational(0), Rational(1)});
    CHECK(p.support() == std::vector<int>{0, 2});
}
