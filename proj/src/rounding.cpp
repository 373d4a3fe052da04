#include "mcst/rounding.hpp"

#include <algorithm>
#include <bit>

#include "mcst/dsu.hpp"
#include "mcst/error.hpp"

namespace mcst {

namespace {

struct PieceCandidates {
    const Piece* piece;
    std::vector<std::vector<int>> trees;        // edge-index lists
    std::vector<std::vector<long>> crossings;   // per candidate, per chain set
};

void enumerate_piece_trees(const std::vector<std::pair<int, std::pair<int, int>>>& edges,
                           std::size_t from, Dsu& dsu, std::vector<int>& chosen,
                           std::size_t need, std::vector<std::vector<int>>& out) {
    if (chosen.size() == need) {
        out.push_back(chosen);
        return;
    }
    {
        Dsu probe = dsu;
        for (std::size_t e = from; e < edges.size(); ++e)
            probe.unite(static_cast<std::size_t>(edges[e].second.first),
                        static_cast<std::size_t>(edges[e].second.second));
        if (probe.components() != 1) return;
    }
    for (std::size_t e = from; e < edges.size(); ++e) {
        std::size_t mark = dsu.mark();
        if (!dsu.unite(static_cast<std::size_t>(edges[e].second.first),
                       static_cast<std::size_t>(edges[e].second.second)))
            continue;
        chosen.push_back(edges[e].first);
        enumerate_piece_trees(edges, e + 1, dsu, chosen, need, out);
        chosen.pop_back();
        dsu.rollback(mark);
    }
}

struct SearchState {
    const std::vector<PieceCandidates>* pieces;
    const std::vector<Rational>* cuts;  // x'(delta(S)) per chain set
    std::uint64_t budget;
    std::uint64_t visited = 0;

    bool have_best = false;
    Rational best_ratio;
    std::vector<std::string> best_ids;
    std::vector<std::vector<int>> best_choice;

    const Graph* graph;
    std::vector<long> counts;                 // running crossing counts
    std::vector<std::vector<int>> choice;     // chosen candidate per piece

    Rational max_ratio(const std::vector<long>& c) const {
        Rational worst = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            Rational ratio = Rational(c[i]) / (*cuts)[i];
            if (ratio > worst) worst = ratio;
        }
        return worst;
    }

    std::vector<std::string> tree_ids(const std::vector<std::vector<int>>& parts) const {
        std::vector<std::string> ids;
        for (const auto& part : parts)
            for (int e : part) ids.push_back(graph->edge(e).id);
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    void dfs(std::size_t level) {
        if (++visited > budget)
            throw Error(ErrorCode::SearchBudgetExceeded,
                        "rounding search exceeded its node budget");
        if (have_best && max_ratio(counts) > best_ratio) return;
        if (level == pieces->size()) {
            Rational ratio = max_ratio(counts);
            auto ids = tree_ids(choice);
            if (!have_best || ratio < best_ratio || (ratio == best_ratio && ids < best_ids)) {
                have_best = true;
                best_ratio = ratio;
                best_ids = std::move(ids);
                best_choice = choice;
            }
            return;
        }
        const PieceCandidates& pc = (*pieces)[level];
        for (std::size_t cand = 0; cand < pc.trees.size(); ++cand) {
            for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += pc.crossings[cand][i];
            choice.push_back(pc.trees[cand]);
            dfs(level + 1);
            choice.pop_back();
            for (std::size_t i = 0; i < counts.size(); ++i) counts[i] -= pc.crossings[cand][i];
        }
    }
};

}  // namespace

Tree face_preserving_round(const FractionalPoint& x_prime, const LaminarDecomposition& decomp,
                           const Graph& graph, const Chain& chain,
                           const RoundingOptions& options) {
    if (!find_rainbows(x_prime, decomp, graph, chain).empty())
        throw Error(ErrorCode::InternalInvariant, "rounding requires a rainbow-free decomposition");

    std::vector<Rational> cuts;
    for (std::size_t i = 0; i < chain.size(); ++i)
        cuts.push_back(cut_value(graph, x_prime.values, chain.set(i).mask));

    std::vector<PieceCandidates> pieces;
    for (const Piece& piece : decomp.pieces) {
        if (piece.children.size() < 2) continue;
        std::vector<std::pair<int, std::pair<int, int>>> edges;
        for (int e : piece.piece_edges) {
            if (x_prime.values[static_cast<std::size_t>(e)] == 0) continue;
            int cu = piece.child_of_node(graph.edge(e).u);
            int cv = piece.child_of_node(graph.edge(e).v);
            edges.emplace_back(e, std::make_pair(cu, cv));
        }
        std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
            return graph.edge(a.first).id < graph.edge(b.first).id;
        });
        PieceCandidates pc;
        pc.piece = &piece;
        Dsu dsu(piece.children.size());
        std::vector<int> chosen;
        enumerate_piece_trees(edges, 0, dsu, chosen, piece.children.size() - 1, pc.trees);
        if (pc.trees.empty())
            throw Error(ErrorCode::InternalInvariant,
                        "piece support admits no spanning tree: " + graph.set_key(piece.set));
        for (const auto& tree : pc.trees) {
            std::vector<long> cross(chain.size(), 0);
            for (int e : tree)
                for (std::size_t i = 0; i < chain.size(); ++i)
                    if (graph.edge_crosses(e, chain.set(i).mask)) ++cross[i];
            pc.crossings.push_back(std::move(cross));
        }
        pieces.push_back(std::move(pc));
    }

    std::sort(pieces.begin(), pieces.end(), [](const PieceCandidates& a, const PieceCandidates& b) {
        if (a.trees.size() != b.trees.size()) return a.trees.size() < b.trees.size();
        return a.piece->set < b.piece->set;
    });

    SearchState search;
    search.pieces = &pieces;
    search.cuts = &cuts;
    search.budget = options.search_budget;
    search.graph = &graph;
    search.counts.assign(chain.size(), 0);
    search.dfs(0);
    if (!search.have_best)
        throw Error(ErrorCode::InternalInvariant, "rounding search found no concatenation");

    Tree tree;
    for (const auto& part : search.best_choice)
        for (int e : part) tree.edges.push_back(e);
    std::sort(tree.edges.begin(), tree.edges.end());

    if (!is_spanning_tree(graph, tree.edges))
        throw Error(ErrorCode::InternalInvariant, "piece concatenation is not a spanning tree");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        long crossing = 0;
        for (int e : tree.edges)
            if (graph.edge_crosses(e, chain.set(i).mask)) ++crossing;
        if (Rational(crossing) > 9 * cuts[i])
            throw Error(ErrorCode::ContractExceeded,
                        "crossing of S" + std::to_string(i + 1) + " exceeds 9x the cut load");
    }
    return tree;
}

bool is_on_minimal_face(const FractionalPoint& x, const Tree& tree, const Graph& graph) {
    if (graph.node_count() > kMaxNodes)
        throw Error(ErrorCode::TooLarge, "minimal-face check enumerates subsets up to 18 nodes");
    for (int e : tree.edges)
        if (x.values[static_cast<std::size_t>(e)] == 0) return false;
    NodeMask full = graph.full_mask();
    for (NodeMask set = 1; set <= full; ++set) {
        Rational bound = std::popcount(set) - 1;
        if (inside_value(graph, x.values, set) != bound) continue;
        long tree_inside = 0;
        for (int e : tree.edges)
            if (graph.edge_inside(e, set)) ++tree_inside;
        if (Rational(tree_inside) != bound) return false;
    }
    return true;
}

RoundingCertificate mcst_pipeline(const Instance& instance, const Rational& lambda,
                                  const RoundingOptions& options) {
    if (lambda <= 1)
        throw Error(ErrorCode::ValidationFailed, "pipeline requires lambda > 1");
    const Graph& graph = instance.graph;
    const Chain& chain = instance.chain;

    ChainLpResult base = solve_chain_lp(instance, Rational(1));
    if (base.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InfeasibleLp,
                    "no fractional spanning tree satisfies the degree bounds");
    ChainLpResult inflated = solve_chain_lp(instance, lambda);
    if (inflated.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant, "inflated LP infeasible although (P) is feasible");

    RoundingCertificate cert;
    cert.lambda = lambda;
    cert.opt1 = base.opt;
    cert.opt_lambda = inflated.opt;
    cert.x_star = inflated.point;
    cert.duals = extract_duals(instance, lambda, inflated);

    LaminarDecomposition decomp = laminar_decomposition(cert.x_star, graph);
    cert.family = decomp.family.sets;

    std::vector<Rational> perturbed = perturbed_costs(graph, chain, cert.duals.y);
    cert.lemma3 = verify_lemma3(instance, lambda, cert.x_star, cert.duals, cert.opt_lambda);
    cert.lemma4 = verify_lemma4(cert.x_star, decomp, perturbed, graph);
    cert.lemma6 = verify_lemma6(cert.opt1, cert.opt_lambda, lambda, cert.duals, chain);

    RainbowFreeResult rf = make_rainbow_free(cert.x_star, decomp, instance);
    cert.x_prime = rf.x_prime;
    cert.family_prime = rf.decomp_prime.family.sets;

    cert.tree = face_preserving_round(cert.x_prime, rf.decomp_prime, graph, chain, options);

    cert.cost = 0;
    cert.perturbed_tree_cost = 0;
    for (int e : cert.tree.edges) {
        cert.cost += graph.edge(e).cost;
        cert.perturbed_tree_cost += perturbed[static_cast<std::size_t>(e)];
    }
    cert.perturbed_fractional_cost = 0;
    for (int e = 0; e < graph.edge_count(); ++e)
        cert.perturbed_fractional_cost +=
            perturbed[static_cast<std::size_t>(e)] * cert.x_star.values[static_cast<std::size_t>(e)];

    for (std::size_t i = 0; i < chain.size(); ++i) {
        long crossing = 0;
        for (int e : cert.tree.edges)
            if (graph.edge_crosses(e, chain.set(i).mask)) ++crossing;
        cert.crossings.push_back(crossing);
        Rational cut = cut_value(graph, cert.x_prime.values, chain.set(i).mask);
        cert.crossing_ratios.push_back(crossing == 0 ? Rational(0) : Rational(crossing) / cut);
    }

    // bicriteria bounds, exactly
    if ((lambda - 1) * cert.cost > lambda * cert.opt1)
        throw Error(ErrorCode::CertFailed, "tree cost exceeds lambda/(lambda-1) * OPT(1)");
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (Rational(cert.crossings[i]) > 9 * lambda * Rational(chain.set(i).bound))
            throw Error(ErrorCode::CertFailed,
                        "crossing of S" + std::to_string(i + 1) + " exceeds 9*lambda*b");

    // cost identities along the input decomposition
    if (cert.perturbed_tree_cost != cert.perturbed_fractional_cost)
        throw Error(ErrorCode::CertFailed, "perturbed tree cost differs from fractional mass");
    Rational direct = 0;
    for (int e = 0; e < graph.edge_count(); ++e)
        direct += graph.edge(e).cost * cert.x_star.values[static_cast<std::size_t>(e)];
    direct += lambda * cert.duals.weighted_bound_sum(chain);
    if (cert.perturbed_fractional_cost != direct)
        throw Error(ErrorCode::CertFailed, "perturbed mass differs from cost + lambda*sum b y");
    if (cert.cost > cert.perturbed_tree_cost)
        throw Error(ErrorCode::CertFailed, "tree cost exceeds its perturbed cost");

    if (!is_on_minimal_face(cert.x_prime, cert.tree, graph))
        throw Error(ErrorCode::CertFailed, "tree leaves the minimal face of x'");

    // tightness of the input family at T, and per-piece spanning trees
    for (std::size_t i = 0; i < decomp.family.sets.size(); ++i) {
        NodeMask member = decomp.family.sets[i];
        long inside = 0;
        for (int e : cert.tree.edges)
            if (graph.edge_inside(e, member)) ++inside;
        if (inside != std::popcount(member) - 1)
            throw Error(ErrorCode::CertFailed,
                        "input family member not tight at T: " + graph.set_key(member));
        const Piece& piece = decomp.pieces[i];
        if (piece.children.size() < 2) continue;
        Dsu dsu(piece.children.size());
        long used = 0;
        for (int e : cert.tree.edges) {
            if (std::find(piece.piece_edges.begin(), piece.piece_edges.end(), e) ==
                piece.piece_edges.end())
                continue;
            ++used;
            if (!dsu.unite(static_cast<std::size_t>(piece.child_of_node(graph.edge(e).u)),
                           static_cast<std::size_t>(piece.child_of_node(graph.edge(e).v))))
                throw Error(ErrorCode::CertFailed,
                            "tree restricted to a piece has a cycle: " + graph.set_key(member));
        }
        if (used + 1 != static_cast<long>(piece.children.size()) || dsu.components() != 1)
            throw Error(ErrorCode::CertFailed,
                        "tree restricted to a piece is not spanning: " + graph.set_key(member));
    }
    return cert;
}

}  // namespace mcst
