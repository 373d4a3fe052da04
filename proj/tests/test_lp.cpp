#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lp_brute.hpp"
#include "mcst/error.hpp"
#include "mcst/oracle.hpp"
#include "mcst/rng.hpp"

using namespace mcst;

TEST_CASE("one-variable LP with a lower bound") {
    ConstraintSystem system;
    int x = system.add_variable("x");
    system.set_objective(x, Rational(1));
    LinRow row;
    row.tag = "lb";
    row.coeffs[x] = 1;
    row.sense = Sense::Ge;
    row.rhs = 3;
    system.add_row(row);

    LPSolution sol = solve(system);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.value == 3);
    CHECK(sol.dual_of("lb") == 1);
    CHECK(sol.is_vertex);
}

TEST_CASE("contradictory bounds are infeasible") {
    ConstraintSystem system;
    int x = system.add_variable("x");
    system.set_objective(x, Rational(1));
    LinRow up{"up", {{x, Rational(1)}}, Sense::Le, Rational(0)};
    LinRow low{"low", {{x, Rational(1)}}, Sense::Ge, Rational(1)};
    system.add_row(up);
    system.add_row(low);
    CHECK(solve(system).status == SolveStatus::Infeasible);
}

TEST_CASE("unbounded direction is reported") {
    ConstraintSystem system;
    int x = system.add_variable("x");
    system.set_objective(x, Rational(-1));
    CHECK(solve(system).status == SolveStatus::Unbounded);
}

TEST_CASE("negative right-hand sides are normalized with correct duals") {
    ConstraintSystem system;
    int x = system.add_variable("x");
    system.set_objective(x, Rational(1));
    LinRow row;
    row.tag = "neg";
    row.coeffs[x] = -1;
    row.sense = Sense::Le;
    row.rhs = -3;  // -x <= -3, i.e. x >= 3
    system.add_row(row);
    LPSolution sol = solve(system);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.value == 3);
    CHECK(sol.dual_of("neg") == -1);  // <= row: dual <= 0, value 3 = (-1)*(-3)
    CHECK(certificate_violations(system, sol).empty());
}

TEST_CASE("redundant equality rows are dropped with zero duals") {
    ConstraintSystem system;
    int x = system.add_variable("x");
    int y = system.add_variable("y");
    system.set_objective(x, Rational(1));
    system.set_objective(y, Rational(2));
    LinRow sum{"sum", {{x, Rational(1)}, {y, Rational(1)}}, Sense::Eq, Rational(1)};
    LinRow twice{"twice", {{x, Rational(2)}, {y, Rational(2)}}, Sense::Eq, Rational(2)};
    system.add_row(sum);
    system.add_row(twice);
    LPSolution sol = solve(system);
    REQUIRE(sol.status == SolveStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(sol.primal == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(certificate_violations(system, sol).empty());
}

TEST_CASE("E1 chain LP matches the brute-force vertex oracle") {
    Instance inst = fixtures::e1();
    ChainLpResult result = solve_chain_lp(inst, Rational(1));
    REQUIRE(result.status == SolveStatus::Optimal);
    CHECK(result.opt == 5);
    CHECK(result.point.values == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(result.solution.is_vertex);

    auto brute = lp_brute::brute_force_min(result.system);
    REQUIRE(brute.optimum.has_value());
    CHECK(*brute.optimum == 5);
}

TEST_CASE("E1 inflated chain LP finds the spanning-tree optimum") {
    Instance inst = fixtures::e1();
    ChainLpResult result = solve_chain_lp(inst, Rational(2));
    REQUIRE(result.status == SolveStatus::Optimal);
    CHECK(result.opt == 3);
    CHECK(result.point.values == std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
    // the optimum over all spanning trees, by enumeration
    auto trees = all_spanning_trees(inst.graph);
    Rational best;
    bool first = true;
    for (const Tree& tree : trees) {
        Rational cost = 0;
        for (int e : tree.edges) cost += inst.graph.edge(e).cost;
        if (first || cost < best) best = cost;
        first = false;
    }
    CHECK(result.opt == best);
}

TEST_CASE("E2 has a unique spanning tree") {
    Instance inst = fixtures::e2();
    ChainLpResult result = solve_chain_lp(inst, Rational(1));
    REQUIRE(result.status == SolveStatus::Optimal);
    CHECK(result.opt == 2);
    CHECK(result.point.values == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("infeasible chain LP is reported as a status") {
    Instance inst = fixtures::star_infeasible();
    CHECK(solve_chain_lp(inst, Rational(1)).status == SolveStatus::Infeasible);
    CHECK(solve_chain_lp(inst, Rational(2)).status == SolveStatus::Infeasible);
    CHECK(solve_chain_lp(inst, Rational(3)).status == SolveStatus::Optimal);
}

TEST_CASE("separation returns the most violated subset with tie-breaks") {
    Instance inst = fixtures::e1();
    SUBCASE("violated pair") {
        FractionalPoint x{{make_rational(6, 5), make_rational(4, 5), Rational(0)}};
        SeparationResult sep = separate_spanning_tree(x, inst.graph);
        REQUIRE_FALSE(sep.all_satisfied);
        CHECK(sep.set == inst.graph.mask_of({"v1", "v2"}));
        CHECK(sep.violation == make_rational(1, 5));
    }
    SUBCASE("satisfied point") {
        FractionalPoint x{{Rational(1), Rational(0), Rational(1)}};
        CHECK(separate_spanning_tree(x, inst.graph).all_satisfied);
    }
    SUBCASE("tightness is not violation") {
        FractionalPoint x{{Rational(1), Rational(1), Rational(0)}};
        CHECK(separate_spanning_tree(x, inst.graph).all_satisfied);
    }
}

TEST_CASE("certificates hold exactly on every optimal chain solve") {
    for (const Instance& inst : {fixtures::e1(), fixtures::e2(), fixtures::e3(),
                                 fixtures::k4_fractional()}) {
        for (Rational lambda : {Rational(1), make_rational(3, 2), Rational(2)}) {
            ChainLpResult result = solve_chain_lp(inst, lambda);
            if (result.status != SolveStatus::Optimal) continue;
            CHECK(certificate_violations(result.system, result.solution).empty());
            CHECK(result.solution.is_vertex);
        }
    }
}

TEST_CASE("fractional vertex on the tight K4 instance") {
    Instance inst = fixtures::k4_fractional();
    ChainLpResult result = solve_chain_lp(inst, make_rational(3, 2));
    REQUIRE(result.status == SolveStatus::Optimal);
    CHECK(result.opt == make_rational(3, 2));
    bool fractional = false;
    for (const auto& v : result.point.values)
        if (v != 0 && v != 1) fractional = true;
    CHECK(fractional);
    // the cutting-plane value agrees with the fully materialized LP
    CHECK(materialized_chain_lp_value(inst, make_rational(3, 2)) == result.opt);
}

TEST_CASE("duals of generated rows cover the active constraints") {
    Instance inst = fixtures::e1();
    ChainLpResult result = solve_chain_lp(inst, Rational(1));
    // every nonzero dual belongs to a generated row, and rows never
    // generated count as zero
    for (const auto& [tag, value] : result.solution.dual) {
        bool found = false;
        for (const LinRow& row : result.system.rows())
            if (row.tag == tag) found = true;
        CHECK(found);
    }
    CHECK(result.solution.dual_of("st:v1,v2,v3") == 0);  // never generated
}

TEST_CASE("numeric overflow guard triggers only when configured") {
    Instance inst = fixtures::e1();
    SolverOptions options;
    options.max_bits = 1;  // absurdly small: any pivot overflows
    CHECK_THROWS_AS(solve_chain_lp(inst, Rational(1), options), Error);
    options.max_bits = 0;  // default: unbounded
    CHECK(solve_chain_lp(inst, Rational(1), options).status == SolveStatus::Optimal);
}

TEST_CASE("random mixed-sense programs agree with the vertex oracle") {
    mcst::Rng rng(2024);
    int optimal_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        ConstraintSystem system;
        int n = 2 + static_cast<int>(rng.below(3));
        for (int j = 0; j < n; ++j) {
            int var = system.add_variable("x" + std::to_string(j));
            system.set_objective(var, make_rational(static_cast<long>(rng.below(9)) - 2, 1));
        }
        int m = 1 + static_cast<int>(rng.below(5));
        bool bounded_box = false;
        for (int r = 0; r < m; ++r) {
            LinRow row;
            row.tag = "r" + std::to_string(r);
            for (int j = 0; j < n; ++j) {
                long coeff = static_cast<long>(rng.below(7)) - 3;
                if (coeff != 0) row.coeffs[j] = Rational(coeff);
            }
            switch (rng.below(3)) {
                case 0: row.sense = Sense::Le; break;
                case 1: row.sense = Sense::Ge; break;
                default: row.sense = Sense::Eq; break;
            }
            row.rhs = make_rational(static_cast<long>(rng.below(13)) - 4, 2);
            system.add_row(std::move(row));
        }
        // cap the box so the program is bounded and the oracle is complete
        {
            LinRow cap;
            cap.tag = "cap";
            for (int j = 0; j < n; ++j) cap.coeffs[j] = 1;
            cap.sense = Sense::Le;
            cap.rhs = 10;
            system.add_row(std::move(cap));
            bounded_box = true;
        }
        REQUIRE(bounded_box);

        LPSolution sol = solve(system);
        auto brute = lp_brute::brute_force_min(system);
        if (sol.status == SolveStatus::Optimal) {
            ++optimal_seen;
            REQUIRE(brute.optimum.has_value());
            CHECK(sol.value == *brute.optimum);
            CHECK(certificate_violations(system, sol).empty());
            CHECK(sol.is_vertex);
        } else if (sol.status == SolveStatus::Infeasible) {
            ++infeasible_seen;
            CHECK_FALSE(brute.optimum.has_value());
        }
    }
    // the generator must actually exercise both outcomes
    CHECK(optimal_seen > 20);
    CHECK(infeasible_seen > 20);
}

TEST_CASE("cutting-plane value equals materialized value on small fixtures") {
    for (const Instance& inst : {fixtures::e1(), fixtures::e2(), fixtures::e3()}) {
        for (Rational lambda : {Rational(1), Rational(2)}) {
            ChainLpResult result = solve_chain_lp(inst, lambda);
            if (result.status != SolveStatus::Optimal) continue;
            CHECK(result.opt == materialized_chain_lp_value(inst, lambda));
        }
    }
}
