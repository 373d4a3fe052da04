#include "mcst/rainbow.hpp"

#include <algorithm>
#include <bit>

#include "mcst/error.hpp"

namespace mcst {

namespace {

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<RainbowReport> find_rainbows(const FractionalPoint& x,
                                         const LaminarDecomposition& decomp,
                                         const Graph& graph, const Chain& chain) {
    std::vector<std::vector<std::size_t>> crossed(static_cast<std::size_t>(graph.edge_count()));
    for (int e = 0; e < graph.edge_count(); ++e)
        crossed[static_cast<std::size_t>(e)] = chain_sets_crossed(graph, chain, e);

    std::vector<RainbowReport> out;
    for (const Piece& piece : decomp.pieces) {
        std::vector<int> support;
        for (int e : piece.piece_edges)
            if (x.values[static_cast<std::size_t>(e)] > 0) support.push_back(e);
        for (std::size_t i = 0; i < support.size(); ++i) {
            for (std::size_t j = i + 1; j < support.size(); ++j) {
                int e = support[i];
                int f = support[j];
                const auto& se = crossed[static_cast<std::size_t>(e)];
                const auto& sf = crossed[static_cast<std::size_t>(f)];
                if (subset_of(se, sf))
                    out.push_back(RainbowReport{piece.set, e, f, true});
                else if (subset_of(sf, se))
                    out.push_back(RainbowReport{piece.set, e, f, false});
            }
        }
    }
    return out;
}

RainbowFreeResult make_rainbow_free(const FractionalPoint& x, const LaminarDecomposition& decomp,
                                    const Instance& instance, const SolverOptions& options) {
    const Graph& graph = instance.graph;
    const Chain& chain = instance.chain;

    std::vector<int> support = x.support();
    if (support.empty() && graph.node_count() > 1)
        throw Error(ErrorCode::InternalInvariant, "point with empty support");

    // weights: rank in the |S_e|-ascending order (ties by edge identifier)
    std::vector<int> order = support;
    std::vector<std::size_t> crossed_count(static_cast<std::size_t>(graph.edge_count()), 0);
    for (int e : support)
        crossed_count[static_cast<std::size_t>(e)] =
            chain_sets_crossed(graph, chain, e).size();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::size_t ca = crossed_count[static_cast<std::size_t>(a)];
        std::size_t cb = crossed_count[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        return graph.edge(a).id < graph.edge(b).id;
    });

    // (P') over the support variables: z_e = 0 off the support by omission
    ConstraintSystem system;
    std::vector<int> var_of(static_cast<std::size_t>(graph.edge_count()), -1);
    for (int e : support)
        var_of[static_cast<std::size_t>(e)] = system.add_variable(graph.edge(e).id);
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        system.set_objective(var_of[static_cast<std::size_t>(order[rank])],
                             Rational(static_cast<long>(rank + 1)));

    LinRow span;
    span.tag = "span";
    span.sense = Sense::Eq;
    span.rhs = graph.node_count() - 1;
    for (int e : support) span.coeffs[var_of[static_cast<std::size_t>(e)]] = 1;
    system.add_row(std::move(span));

    for (std::size_t i = 0; i < chain.size(); ++i) {
        LinRow row;
        row.tag = "cut:S" + std::to_string(i + 1);
        row.sense = Sense::Le;
        row.rhs = cut_value(graph, x.values, chain.set(i).mask);
        for (int e : support)
            if (graph.edge_crosses(e, chain.set(i).mask))
                row.coeffs[var_of[static_cast<std::size_t>(e)]] = 1;
        system.add_row(std::move(row));
    }

    for (NodeMask member : decomp.family.sets) {
        if (member == graph.full_mask() || std::popcount(member) < 2) continue;
        LinRow row;
        row.tag = "fam:" + graph.set_key(member);
        row.sense = Sense::Eq;
        row.rhs = std::popcount(member) - 1;
        for (int e : support)
            if (graph.edge_inside(e, member))
                row.coeffs[var_of[static_cast<std::size_t>(e)]] = 1;
        system.add_row(std::move(row));
    }

    std::vector<NodeMask> pairs;
    for (int a = 0; a < graph.node_count(); ++a)
        for (int b = a + 1; b < graph.node_count(); ++b)
            pairs.push_back((NodeMask(1) << a) | (NodeMask(1) << b));
    std::sort(pairs.begin(), pairs.end(), SetOrder{&graph});
    for (NodeMask pair : pairs) {
        LinRow row;
        row.tag = subset_row_tag(graph, pair);
        row.sense = Sense::Le;
        row.rhs = 1;
        bool any = false;
        for (int e : support)
            if (graph.edge_inside(e, pair)) {
                row.coeffs[var_of[static_cast<std::size_t>(e)]] = 1;
                any = true;
            }
        if (any) system.add_row(std::move(row));
    }

    auto separator = [&](const std::vector<Rational>& primal) -> std::optional<LinRow> {
        std::vector<Rational> full(static_cast<std::size_t>(graph.edge_count()), Rational(0));
        for (int e : support)
            full[static_cast<std::size_t>(e)] =
                primal[static_cast<std::size_t>(var_of[static_cast<std::size_t>(e)])];
        SeparationResult sep = separate_spanning_tree(FractionalPoint{full}, graph);
        if (sep.all_satisfied) return std::nullopt;
        LinRow row;
        row.tag = subset_row_tag(graph, sep.set);
        row.sense = Sense::Le;
        row.rhs = std::popcount(sep.set) - 1;
        for (int e : support)
            if (graph.edge_inside(e, sep.set))
                row.coeffs[var_of[static_cast<std::size_t>(e)]] = 1;
        return row;
    };

    LazySolveResult lazy = solve_with_lazy_rows(std::move(system), separator, options);
    if (lazy.solution.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant,
                    "potential LP must be feasible: z = x is a feasible point");

    RainbowFreeResult result;
    result.sorted_support = order;
    std::vector<Rational> values(static_cast<std::size_t>(graph.edge_count()), Rational(0));
    for (int e : support)
        values[static_cast<std::size_t>(e)] =
            lazy.solution.primal[static_cast<std::size_t>(var_of[static_cast<std::size_t>(e)])];
    result.x_prime = FractionalPoint{std::move(values)};

    result.decomp_prime = laminar_decomposition(result.x_prime, graph, decomp.family.sets);

    // conversion post-conditions
    for (int e = 0; e < graph.edge_count(); ++e)
        if (result.x_prime.values[static_cast<std::size_t>(e)] > 0 &&
            x.values[static_cast<std::size_t>(e)] == 0)
            throw Error(ErrorCode::InternalInvariant, "support grew under the potential LP");
    for (NodeMask member : decomp.family.sets)
        if (!result.decomp_prime.family.contains(member))
            throw Error(ErrorCode::InternalInvariant, "input family lost in the output family");
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (cut_value(graph, result.x_prime.values, chain.set(i).mask) >
            cut_value(graph, x.values, chain.set(i).mask))
            throw Error(ErrorCode::InternalInvariant, "chain cut increased");
    if (!find_rainbows(result.x_prime, result.decomp_prime, graph, chain).empty())
        throw Error(ErrorCode::InternalInvariant,
                    "optimal solution of the potential LP still has a rainbow");
    return result;
}

}  // namespace mcst
