#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "mcst/error.hpp"
#include "mcst/generator.hpp"
#include "mcst/reduction.hpp"
#include "mcst/rounding.hpp"

using namespace mcst;

TEST_CASE("validation rejects signs and unbounded polytopes") {
    PackingProblem bad = fixtures::toy_simplex();
    bad.c[0] = Rational(-1);
    CHECK_THROWS_AS(validate_packing_problem(bad), Error);

    PackingProblem unbounded;
    unbounded.polytope.variables = {"x"};
    unbounded.c = {Rational(1)};
    CHECK_THROWS_AS(validate_packing_problem(unbounded), Error);
}

TEST_CASE("relaxation of the toy simplex") {
    PackingProblem problem = fixtures::toy_simplex();
    RelaxationResult base = solve_relaxation(problem, Scaling::multiplicative(Rational(1)));
    REQUIRE(base.status == SolveStatus::Optimal);
    CHECK(base.value == make_rational(7, 4));
    CHECK(base.x == std::vector<Rational>{make_rational(1, 4), make_rational(3, 4)});

    RelaxationResult relaxed = solve_relaxation(problem, Scaling::multiplicative(Rational(2)));
    CHECK(relaxed.value == make_rational(3, 2));
    CHECK(relaxed.x == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});
    CHECK(relaxed.y == std::vector<Rational>{Rational(1)});

    RelaxationResult zero = solve_relaxation(problem, Scaling::additive({Rational(0)}));
    CHECK(zero.value == base.value);
}

TEST_CASE("multiplicative driver on the toy simplex") {
    PackingProblem problem = fixtures::toy_simplex();
    Fpra fpra = brute_force_fpra(problem, FpraKind::Multiplicative, Rational(1));
    ReductionResult result = reduce_weighted(problem, Rational(2), fpra);
    REQUIRE(result.feasible);
    // rounder avoids the packed coordinate entirely
    CHECK(result.certificate.x_hat == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(result.certificate.cost_hat == 2);
    // bridge identity: (c + A^T y*) evaluates equally at x_hat and x*
    CHECK(result.certificate.bridge_value == 2);
    CHECK(result.certificate.packing_hat == std::vector<Rational>{Rational(0)});
}

TEST_CASE("multiplicative driver on MCST matches the pipeline exactly") {
    for (std::uint64_t seed : {std::uint64_t(1), std::uint64_t(5), std::uint64_t(9)}) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.nodes = 5 + static_cast<int>(seed % 3);
        cfg.chain_sets = 2;
        Instance inst = generate_instance(cfg);
        PackingProblem problem = mcst_as_packing(inst);
        ReductionResult reduced = reduce_weighted(problem, Rational(2), mcst_fpra(inst));
        REQUIRE(reduced.feasible);
        RoundingCertificate cert = mcst_pipeline(inst, Rational(2));
        std::vector<Rational> tree_vector(static_cast<std::size_t>(inst.graph.edge_count()),
                                          Rational(0));
        for (int e : cert.tree.edges) tree_vector[static_cast<std::size_t>(e)] = 1;
        CHECK(reduced.certificate.x_hat == tree_vector);
        CHECK(reduced.certificate.cost_hat == cert.cost);
        CHECK(reduced.certificate.opt_base == cert.opt1);
    }
}

TEST_CASE("E1 as a packing problem reproduces the chain LP") {
    Instance inst = fixtures::e1();
    PackingProblem problem = mcst_as_packing(inst);
    RelaxationResult relaxed = solve_relaxation(problem, Scaling::multiplicative(Rational(2)));
    CHECK(relaxed.value == 3);
    ReductionResult result = reduce_weighted(problem, Rational(2), mcst_fpra(inst));
    REQUIRE(result.feasible);
    CHECK(result.certificate.cost_hat == 3);
    // proof identity at y* = 0: cost equals OPT(lambda) directly
    CHECK(result.certificate.y_star == std::vector<Rational>{Rational(0)});
    CHECK(result.certificate.bridge_value == 3);
}

TEST_CASE("infeasible packing problems surface as a status") {
    Instance inst = fixtures::star_infeasible();
    PackingProblem problem = mcst_as_packing(inst);
    ReductionResult result = reduce_weighted(problem, Rational(2), mcst_fpra(inst));
    CHECK_FALSE(result.feasible);
}

TEST_CASE("P1 violations are caught") {
    PackingProblem problem = fixtures::toy_simplex();
    SUBCASE("support growth") {
        // at lambda = 8 the packing row is vacuous and x* = (1, 0); answering
        // (0, 1) grows the support at x2
        Fpra broken;
        broken.kind = FpraKind::Multiplicative;
        broken.beta = 1;
        broken.round = [](const std::vector<Rational>&) {
            return std::vector<Rational>{Rational(0), Rational(1)};
        };
        try {
            reduce_weighted(problem, Rational(8), broken);
            FAIL("expected P1_VIOLATION");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::P1Violation);
        }
    }
    SUBCASE("non-vertex output") {
        Fpra broken;
        broken.kind = FpraKind::Multiplicative;
        broken.beta = 1;
        broken.round = [](const std::vector<Rational>& x) { return x; };
        try {
            reduce_weighted(problem, Rational(2), broken);
            FAIL("expected P1_VIOLATION");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::P1Violation);
        }
    }
}

TEST_CASE("tight-row driver with the brute-force oracle rounder") {
    PackingProblem problem = fixtures::toy_simplex();
    SUBCASE("alpha = 2 makes the packing row tight") {
        Fpra fpra = brute_force_fpra(problem, FpraKind::TwoSided, Rational(2));
        ReductionResult result = reduce_two_sided(problem, Rational(2), Rational(2), fpra);
        REQUIRE(result.feasible);
        CHECK(result.certificate.x_hat == std::vector<Rational>{Rational(1), Rational(0)});
        CHECK(result.certificate.cost_hat == 1);  // <= OPT(1) = 7/4
        CHECK(result.certificate.packing_hat[0] == 1);  // = alpha*beta*b exactly
    }
    SUBCASE("alpha = 1 uses the direct certificate") {
        Fpra fpra = brute_force_fpra(problem, FpraKind::TwoSided, Rational(1));
        ReductionResult result = reduce_two_sided(problem, Rational(1), Rational(4), fpra);
        REQUIRE(result.feasible);
        CHECK(result.certificate.cost_hat <= make_rational(7, 4));
    }
    SUBCASE("slack rows make P3 vacuous") {
        PackingProblem loose = fixtures::toy_simplex();
        loose.b = {Rational(2)};  // never tight
        Fpra fpra = brute_force_fpra(loose, FpraKind::TwoSided, Rational(2));
        ReductionResult result = reduce_two_sided(loose, Rational(2), Rational(1), fpra);
        REQUIRE(result.feasible);
        CHECK(result.certificate.cost_hat <= result.certificate.opt_base);
    }
}

TEST_CASE("P3 violations are caught") {
    PackingProblem problem = fixtures::toy_simplex();
    Fpra broken;
    broken.kind = FpraKind::TwoSided;
    broken.alpha = Rational(2);
    broken.beta = 1;
    // always pick the vertex that drops the tight row to zero
    broken.round = [](const std::vector<Rational>&) {
        return std::vector<Rational>{Rational(0), Rational(1)};
    };
    try {
        reduce_two_sided(problem, Rational(2), Rational(2), broken);
        FAIL("expected P3_VIOLATION");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::P3Violation);
    }
}

TEST_CASE("additive lemmas on the toy simplex") {
    PackingProblem problem = fixtures::toy_simplex();
    std::vector<Rational> delta = {make_rational(1, 8)};
    RelaxationResult zero = solve_relaxation(problem, Scaling::additive({Rational(0)}));
    RelaxationResult relaxed = solve_relaxation(problem, Scaling::additive(delta));
    REQUIRE(zero.status == SolveStatus::Optimal);
    REQUIRE(relaxed.status == SolveStatus::Optimal);
    CHECK(relaxed.value <= zero.value);
    // (y*)^T Delta <= OPT(0) - OPT(Delta)
    Rational lhs = relaxed.y[0] * delta[0];
    CHECK(lhs <= zero.value - relaxed.value);
}

TEST_CASE("additive driver with a zero delta and an integral optimum") {
    PackingProblem problem = fixtures::toy_simplex();
    problem.b = {Rational(1)};  // optimum is the integral vertex (1, 0)
    Fpra fpra = brute_force_fpra(problem, FpraKind::Additive, Rational(1), {Rational(0)});
    ReductionResult result = reduce_additive(problem, {Rational(0)}, fpra);
    REQUIRE(result.feasible);
    CHECK(result.certificate.x_hat == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(result.certificate.cost_hat == result.certificate.opt_base);
    CHECK(result.certificate.packing_hat[0] <= problem.b[0]);
}

TEST_CASE("additive violations are caught") {
    PackingProblem problem = fixtures::toy_simplex();
    Fpra broken;
    broken.kind = FpraKind::Additive;
    broken.round = [](const std::vector<Rational>&) {
        return std::vector<Rational>{Rational(1), Rational(0)};
    };
    // delta 1/8 cannot absorb moving a quarter unit
    try {
        reduce_additive(problem, {make_rational(1, 8)}, broken);
        FAIL("expected ADDITIVE_VIOLATION");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AdditiveViolation);
    }
}

TEST_CASE("vertex enumeration finds the simplex corners") {
    PackingProblem problem = fixtures::toy_simplex();
    auto vertices = enumerate_polytope_vertices(problem);
    REQUIRE(vertices.size() == 2);
    CHECK(vertices[0] == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(vertices[1] == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("subgradient bound holds across random MCST reductions") {
    for (std::uint64_t seed = 2; seed <= 10; seed += 2) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.nodes = 5;
        cfg.chain_sets = 2;
        cfg.slack = 0;
        Instance inst = generate_instance(cfg);
        PackingProblem problem = mcst_as_packing(inst);
        for (Rational lambda : {make_rational(3, 2), Rational(2)}) {
            ReductionResult result = reduce_weighted(problem, lambda, mcst_fpra(inst));
            REQUIRE(result.feasible);
            const ReductionCertificate& cert = result.certificate;
            // Lagrangian bridge identity, re-stated from the certificate
            std::vector<Rational> perturbed = problem.c;
            for (std::size_t i = 0; i < problem.rows(); ++i)
                for (std::size_t j = 0; j < problem.vars(); ++j)
                    perturbed[j] += cert.y_star[i] * problem.A[i][j];
            Rational lhs = 0, rhs = 0;
            for (std::size_t j = 0; j < problem.vars(); ++j) {
                lhs += perturbed[j] * cert.x_hat[j];
                rhs += perturbed[j] * cert.x_star[j];
            }
            CHECK(lhs == rhs);
        }
    }
}
