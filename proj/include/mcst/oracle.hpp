#ifndef MCST_ORACLE_HPP
#define MCST_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mcst/instance.hpp"
#include "mcst/lp.hpp"
#include "mcst/matroid.hpp"
#include "mcst/rational.hpp"

namespace mcst {

struct OracleReport {
    std::size_t enumerated = 0;
    std::optional<Rational> optimum;
    std::vector<int> witness;  // edge/element indices
    std::vector<std::vector<int>> feasible;  // optional per-candidate table
};

/// Every spanning tree exactly once, ordered lexicographically by the
/// ascending edge-index sequence. Guarded at 12 nodes.
std::vector<Tree> all_spanning_trees(const Graph& graph, int node_guard = 12);

/// Number of spanning trees by the matrix-tree determinant (exact rationals).
Integer matrix_tree_count(const Graph& graph);

/// Minimum-cost spanning tree subject to the chain bounds, by enumeration.
/// optimum is empty when no tree satisfies the bounds.
OracleReport integral_opt(const Instance& instance, int node_guard = 12);

/// Every basis of the matroid exactly once (lexicographic), |U| <= 14.
std::vector<std::vector<int>> all_bases(const MatroidOracle& matroid, int guard = 14);

/// All bases meeting every budget of the instance, with their length vectors.
OracleReport kbudget_feasible_bases(const BudgetedInstance& instance, int guard = 14);

/// Value of (P_lambda) with all 2^n - 2 subset rows materialized up front.
/// Oracle counterpart of the cutting-plane solver, |V| <= 9 intended.
Rational materialized_chain_lp_value(const Instance& instance, const Rational& lambda);

}  // namespace mcst

#endif
