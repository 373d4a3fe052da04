#include "mcst/oracle.hpp"

#include <algorithm>
#include <bit>

#include "mcst/dsu.hpp"
#include "mcst/error.hpp"

namespace mcst {

namespace {

/// Lexicographic backtracking over ascending edge indices with a
/// connectivity prune (remaining edges must still be able to join the
/// current components).
void enumerate_trees(const Graph& graph, std::size_t from, Dsu& dsu, std::vector<int>& chosen,
                     std::vector<Tree>& out) {
    std::size_t n = static_cast<std::size_t>(graph.node_count());
    if (chosen.size() == n - 1) {
        out.push_back(Tree{chosen});
        return;
    }
    std::size_t m = static_cast<std::size_t>(graph.edge_count());
    // prune: can the remaining edges connect what is left?
    {
        Dsu probe = dsu;
        for (std::size_t e = from; e < m; ++e)
            probe.unite(static_cast<std::size_t>(graph.edge(static_cast<int>(e)).u),
                        static_cast<std::size_t>(graph.edge(static_cast<int>(e)).v));
        if (probe.components() != 1) return;
    }
    for (std::size_t e = from; e < m; ++e) {
        const Edge& ed = graph.edge(static_cast<int>(e));
        std::size_t mark = dsu.mark();
        if (!dsu.unite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) continue;
        chosen.push_back(static_cast<int>(e));
        enumerate_trees(graph, e + 1, dsu, chosen, out);
        chosen.pop_back();
        dsu.rollback(mark);
    }
}

}  // namespace

std::vector<Tree> all_spanning_trees(const Graph& graph, int node_guard) {
    if (graph.node_count() > node_guard)
        throw Error(ErrorCode::TooLarge, "spanning-tree enumeration guard exceeded");
    std::vector<Tree> out;
    Dsu dsu(static_cast<std::size_t>(graph.node_count()));
    std::vector<int> chosen;
    enumerate_trees(graph, 0, dsu, chosen, out);
    return out;
}

Integer matrix_tree_count(const Graph& graph) {
    int n = graph.node_count();
    if (n == 1) return 1;
    std::size_t d = static_cast<std::size_t>(n - 1);
    std::vector<std::vector<Rational>> lap(d, std::vector<Rational>(d, Rational(0)));
    for (const Edge& e : graph.edges()) {
        int u = e.u, v = e.v;
        if (u < n - 1) lap[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] += 1;
        if (v < n - 1) lap[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] += 1;
        if (u < n - 1 && v < n - 1) {
            lap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= 1;
            lap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] -= 1;
        }
    }
    Rational det = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && lap[pivot][col] == 0) ++pivot;
        if (pivot == d) return 0;
        if (pivot != col) {
            std::swap(lap[pivot], lap[col]);
            det = -det;
        }
        det *= lap[col][col];
        for (std::size_t r = col + 1; r < d; ++r) {
            if (lap[r][col] == 0) continue;
            Rational f = lap[r][col] / lap[col][col];
            for (std::size_t c = col; c < d; ++c) lap[r][c] -= f * lap[col][c];
        }
    }
    if (det.get_den() != 1)
        throw Error(ErrorCode::InternalInvariant, "matrix-tree determinant not integral");
    return det.get_num();
}

OracleReport integral_opt(const Instance& instance, int node_guard) {
    OracleReport report;
    auto trees = all_spanning_trees(instance.graph, node_guard);
    report.enumerated = trees.size();
    for (const Tree& tree : trees) {
        bool ok = true;
        for (std::size_t i = 0; i < instance.chain.size(); ++i) {
            const ChainSet& cs = instance.chain.set(i);
            long crossing = 0;
            for (int e : tree.edges)
                if (instance.graph.edge_crosses(e, cs.mask)) ++crossing;
            if (crossing > cs.bound) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        report.feasible.push_back(tree.edges);
        Rational cost = 0;
        for (int e : tree.edges) cost += instance.graph.edge(e).cost;
        if (!report.optimum || cost < *report.optimum) {
            report.optimum = cost;
            report.witness = tree.edges;
        }
    }
    return report;
}

std::vector<std::vector<int>> all_bases(const MatroidOracle& matroid, int guard) {
    if (matroid.size() > guard)
        throw Error(ErrorCode::TooLarge, "basis enumeration guard exceeded");
    int r = matroid.rank_full();
    std::vector<std::vector<int>> out;
    ElemMask full = matroid.full_mask();
    for (ElemMask mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) != r) continue;
        if (!matroid.independent(mask)) continue;
        std::vector<int> elems;
        for (int i = 0; i < matroid.size(); ++i)
            if (mask >> i & 1) elems.push_back(i);
        out.push_back(std::move(elems));
    }
    return out;
}

OracleReport kbudget_feasible_bases(const BudgetedInstance& instance, int guard) {
    OracleReport report;
    auto bases = all_bases(instance.matroid, guard);
    report.enumerated = bases.size();
    for (const auto& basis : bases) {
        ElemMask mask = 0;
        for (int e : basis) mask |= ElemMask(1) << e;
        bool ok = true;
        for (std::size_t i = 0; i < instance.k(); ++i)
            if (instance.length_of(i, mask) > instance.budgets[i]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        report.feasible.push_back(basis);
        Rational objective = instance.length_of(instance.objective_index, mask);
        if (!report.optimum || objective < *report.optimum) {
            report.optimum = objective;
            report.witness = basis;
        }
    }
    return report;
}

Rational materialized_chain_lp_value(const Instance& instance, const Rational& lambda) {
    const Graph& graph = instance.graph;
    if (graph.node_count() > 12)
        throw Error(ErrorCode::TooLarge, "materialized chain LP guard exceeded");

    ConstraintSystem system;
    for (const Edge& e : graph.edges()) {
        int var = system.add_variable(e.id);
        system.set_objective(var, e.cost);
    }
    LinRow span;
    span.tag = "span";
    span.sense = Sense::Eq;
    span.rhs = graph.node_count() - 1;
    for (int e = 0; e < graph.edge_count(); ++e) span.coeffs[e] = 1;
    system.add_row(std::move(span));
    for (std::size_t i = 0; i < instance.chain.size(); ++i) {
        const ChainSet& cs = instance.chain.set(i);
        LinRow row;
        row.tag = degree_row_tag(i);
        row.sense = Sense::Le;
        row.rhs = lambda * Rational(cs.bound);
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_crosses(e, cs.mask)) row.coeffs[e] = 1;
        system.add_row(std::move(row));
    }
    NodeMask full = graph.full_mask();
    for (NodeMask set = 1; set < full; ++set) {
        if (std::popcount(set) < 2) continue;
        LinRow row;
        row.tag = subset_row_tag(graph, set);
        row.sense = Sense::Le;
        row.rhs = std::popcount(set) - 1;
        bool any = false;
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_inside(e, set)) {
                row.coeffs[e] = 1;
                any = true;
            }
        if (any) system.add_row(std::move(row));
    }
    LPSolution sol = solve(system);
    if (sol.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InfeasibleLp, "materialized chain LP not optimal");
    return sol.value;
}

}  // namespace mcst
