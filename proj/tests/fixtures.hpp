#ifndef MCST_TESTS_FIXTURES_HPP
#define MCST_TESTS_FIXTURES_HPP

#include "mcst/instance.hpp"
#include "mcst/matroid.hpp"
#include "mcst/reduction.hpp"

namespace fixtures {

using namespace mcst;

/// E1: triangle with costs 1/2/4 and the chain {{v1}} with bound 1.
inline Instance e1(long bound = 1) {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)},
                 {"e13", "v1", "v3", Rational(2)},
                 {"e23", "v2", "v3", Rational(4)}};
    raw.chain = {{{"v1"}, bound}};
    return validate_instance(raw);
}

/// E2: path v1 - v2 - v3 with unit costs, chain {{v1}} with bound 1.
inline Instance e2() {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)}, {"e23", "v2", "v3", Rational(1)}};
    raw.chain = {{{"v1"}, 1}};
    return validate_instance(raw);
}

/// E3: 4-cycle with unit costs, chain {v1} < {v1,v2}, bounds 1.
inline Instance e3() {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3", "v4"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)},
                 {"e14", "v1", "v4", Rational(1)},
                 {"e23", "v2", "v3", Rational(1)},
                 {"e34", "v3", "v4", Rational(1)}};
    raw.chain = {{{"v1"}, 1}, {{"v1", "v2"}, 1}};
    return validate_instance(raw);
}

/// Star on four nodes: every spanning tree crosses {v1} three times, so the
/// un-inflated LP is infeasible for b = 1 (and stays so for lambda < 3).
inline Instance star_infeasible() {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3", "v4"};
    raw.edges = {{"e12", "v1", "v2", Rational(1)},
                 {"e13", "v1", "v3", Rational(1)},
                 {"e14", "v1", "v4", Rational(1)}};
    raw.chain = {{{"v1"}, 1}};
    return validate_instance(raw);
}

/// K4 with free edges at v1 and a tight chain bound: (P_3/2) has a
/// fractional optimal vertex, exercising the nontrivial rounding path.
inline Instance k4_fractional() {
    RawInstance raw;
    raw.nodes = {"v1", "v2", "v3", "v4"};
    raw.edges = {{"e12", "v1", "v2", Rational(0)}, {"e13", "v1", "v3", Rational(0)},
                 {"e14", "v1", "v4", Rational(0)}, {"e23", "v2", "v3", Rational(1)},
                 {"e24", "v2", "v4", Rational(1)}, {"e34", "v3", "v4", Rational(1)}};
    raw.chain = {{{"v1"}, 1}};
    return validate_instance(raw);
}

/// M1: graphic matroid of E1's triangle, d1 = (3,1,1), d2 = (1,2,4)
/// (objective), B = (2, 6).
inline BudgetedInstance m1() {
    BudgetedInstance instance;
    instance.matroid = MatroidOracle::graphic(e1().graph);
    instance.lengths = {{Rational(3), Rational(1), Rational(1)},
                        {Rational(1), Rational(2), Rational(4)}};
    instance.budgets = {Rational(2), Rational(6)};
    instance.objective_index = 1;
    return instance;
}

/// Two-variable simplex {x >= 0, x1 + x2 = 1} with one packing row
/// A = (1 0), b = (1/4), c = (1, 2).
inline PackingProblem toy_simplex() {
    PackingProblem problem;
    problem.polytope.variables = {"x1", "x2"};
    LinRow eq;
    eq.tag = "sum";
    eq.sense = Sense::Eq;
    eq.rhs = 1;
    eq.coeffs[0] = 1;
    eq.coeffs[1] = 1;
    problem.polytope.eq_rows.push_back(eq);
    problem.polytope.all_rows = [eq]() { return std::vector<LinRow>{eq}; };
    problem.A = {{Rational(1), Rational(0)}};
    problem.b = {make_rational(1, 4)};
    problem.c = {Rational(1), Rational(2)};
    return problem;
}

}  // namespace fixtures

#endif
