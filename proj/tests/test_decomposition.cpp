#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "fixtures.hpp"
#include "mcst/decomposition.hpp"
#include "mcst/error.hpp"
#include "mcst/generator.hpp"
#include "mcst/lp.hpp"

using namespace mcst;

namespace {

std::vector<NodeMask> masks(const Graph& graph, const std::vector<std::vector<std::string>>& sets) {
    std::vector<NodeMask> out;
    for (const auto& ids : sets) out.push_back(graph.mask_of(ids));
    std::sort(out.begin(), out.end(), SetOrder{&graph});
    return out;
}

}  // namespace

TEST_CASE("tight sets of E1 points") {
    Instance inst = fixtures::e1();
    const Graph& g = inst.graph;

    auto t1 = tight_sets(FractionalPoint{{Rational(1), Rational(0), Rational(1)}}, g);
    CHECK(t1 == masks(g, {{"v1"}, {"v2"}, {"v3"}, {"v1", "v2"}, {"v2", "v3"},
                          {"v1", "v2", "v3"}}));

    auto t2 = tight_sets(FractionalPoint{{Rational(1), Rational(1), Rational(0)}}, g);
    CHECK(t2 == masks(g, {{"v1"}, {"v2"}, {"v3"}, {"v1", "v2"}, {"v1", "v3"},
                          {"v1", "v2", "v3"}}));

    auto t3 = tight_sets(FractionalPoint{{make_rational(1, 2), make_rational(1, 2), Rational(1)}}, g);
    CHECK(t3 == masks(g, {{"v1"}, {"v2"}, {"v3"}, {"v2", "v3"}, {"v1", "v2", "v3"}}));
}

TEST_CASE("the uniform 2/3 point is interior: only singletons and V are tight") {
    Instance inst = fixtures::e1();
    FractionalPoint x{{make_rational(2, 3), make_rational(2, 3), make_rational(2, 3)}};
    auto tight = tight_sets(x, inst.graph);
    CHECK(tight == masks(inst.graph, {{"v1"}, {"v2"}, {"v3"}, {"v1", "v2", "v3"}}));
}

TEST_CASE("points outside the polytope are rejected") {
    Instance inst = fixtures::e1();
    // pair set {v1,v2} carries mass 3/2 > 1
    FractionalPoint bad{{make_rational(3, 2), make_rational(1, 4), make_rational(1, 4)}};
    CHECK_THROWS_AS(tight_sets(bad, inst.graph), Error);
    FractionalPoint negative{{Rational(-1), Rational(1), Rational(2)}};
    CHECK_THROWS_AS(tight_sets(negative, inst.graph), Error);
    FractionalPoint off_mass{{Rational(1), Rational(0), Rational(0)}};
    CHECK_THROWS_AS(tight_sets(off_mass, inst.graph), Error);
}

TEST_CASE("greedy laminar family of E1 picks the lexicographically first crossing set") {
    Instance inst = fixtures::e1();
    const Graph& g = inst.graph;
    auto decomp = laminar_decomposition(FractionalPoint{{Rational(1), Rational(0), Rational(1)}}, g);
    CHECK(decomp.family.sets ==
          masks(g, {{"v1"}, {"v2"}, {"v3"}, {"v1", "v2"}, {"v1", "v2", "v3"}}));

    auto d2 = laminar_decomposition(
        FractionalPoint{{make_rational(1, 2), make_rational(1, 2), Rational(1)}}, g);
    CHECK(d2.family.sets == masks(g, {{"v1"}, {"v2"}, {"v3"}, {"v2", "v3"}, {"v1", "v2", "v3"}}));
}

TEST_CASE("E2's unique tree yields the path family") {
    Instance inst = fixtures::e2();
    auto decomp = laminar_decomposition(FractionalPoint{{Rational(1), Rational(1)}}, inst.graph);
    CHECK(decomp.family.contains(inst.graph.mask_of({"v1", "v2"})));
    CHECK(decomp.family.contains(inst.graph.full_mask()));
    CHECK(decomp.family.contains(inst.graph.mask_of({"v1"})));
}

TEST_CASE("pieces of the E1 decomposition") {
    Instance inst = fixtures::e1();
    const Graph& g = inst.graph;
    FractionalPoint x{{Rational(1), Rational(0), Rational(1)}};
    auto decomp = laminar_decomposition(x, g);

    SUBCASE("top piece contracts the pair") {
        auto r = restrict_to_piece(x, decomp, g.full_mask(), g);
        REQUIRE(r.piece->piece_edges.size() == 2);
        CHECK(g.edge(r.piece->piece_edges[0]).id == "e13");
        CHECK(g.edge(r.piece->piece_edges[1]).id == "e23");
        CHECK(r.values == std::vector<Rational>{Rational(0), Rational(1)});
    }
    SUBCASE("pair piece is the single edge") {
        auto r = restrict_to_piece(x, decomp, g.mask_of({"v1", "v2"}), g);
        REQUIRE(r.piece->piece_edges.size() == 1);
        CHECK(g.edge(r.piece->piece_edges[0]).id == "e12");
        CHECK(r.values == std::vector<Rational>{Rational(1)});
    }
    SUBCASE("singleton piece has one node and no edges") {
        auto r = restrict_to_piece(x, decomp, g.mask_of({"v3"}), g);
        CHECK(r.piece->children.empty());
        CHECK(r.piece->piece_edges.empty());
    }
    SUBCASE("unknown piece") {
        CHECK_THROWS_AS(restrict_to_piece(x, decomp, g.mask_of({"v1", "v3"}), g), Error);
    }
}

TEST_CASE("piece edges partition the edge set") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.nodes = 5 + static_cast<int>(seed % 4);
        cfg.extra_edges = 2 + static_cast<int>(seed % 3);
        auto inst = generate_instance(cfg);
        auto lp = solve_chain_lp(inst, Rational(2));
        REQUIRE(lp.status == SolveStatus::Optimal);
        auto decomp = laminar_decomposition(lp.point, inst.graph);

        std::vector<int> owner(static_cast<std::size_t>(inst.graph.edge_count()), 0);
        for (const Piece& piece : decomp.pieces)
            for (int e : piece.piece_edges) owner[static_cast<std::size_t>(e)] += 1;
        for (int count : owner) CHECK(count == 1);

        // every piece restriction is a fractional spanning tree of the piece
        for (NodeMask set : decomp.family.sets) (void)restrict_to_piece(lp.point, decomp, set, inst.graph);
    }
}

TEST_CASE("family is maximal: every other tight set crosses a member") {
    for (std::uint64_t seed = 3; seed <= 10; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.nodes = 5 + static_cast<int>(seed % 4);
        auto inst = generate_instance(cfg);
        auto lp = solve_chain_lp(inst, make_rational(3, 2));
        REQUIRE(lp.status == SolveStatus::Optimal);
        auto decomp = laminar_decomposition(lp.point, inst.graph);
        for (NodeMask tight : tight_sets(lp.point, inst.graph)) {
            if (decomp.family.contains(tight)) continue;
            CHECK_FALSE(decomp.family.laminar_with_all(tight));
        }
        // V and all singletons are present
        CHECK(decomp.family.contains(inst.graph.full_mask()));
        for (int v = 0; v < inst.graph.node_count(); ++v)
            CHECK(decomp.family.contains(NodeMask(1) << v));
    }
}

TEST_CASE("decomposition is deterministic") {
    Instance inst = fixtures::k4_fractional();
    auto lp = solve_chain_lp(inst, make_rational(3, 2));
    REQUIRE(lp.status == SolveStatus::Optimal);
    auto a = laminar_decomposition(lp.point, inst.graph);
    auto b = laminar_decomposition(lp.point, inst.graph);
    CHECK(a.family.sets == b.family.sets);
}

TEST_CASE("seeded decomposition keeps the seed family") {
    Instance inst = fixtures::e1();
    const Graph& g = inst.graph;
    FractionalPoint x{{Rational(1), Rational(0), Rational(1)}};
    // seed with the crossing pair that plain greedy would have skipped
    auto seeded = laminar_decomposition(x, g, {g.mask_of({"v2", "v3"})});
    CHECK(seeded.family.contains(g.mask_of({"v2", "v3"})));
    CHECK_FALSE(seeded.family.contains(g.mask_of({"v1", "v2"})));
}
