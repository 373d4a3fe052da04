#include "mcst/generator.hpp"

#include <algorithm>
#include <string>

#include "mcst/error.hpp"
#include "mcst/oracle.hpp"
#include "mcst/rng.hpp"

namespace mcst {

namespace {

std::string padded(const char* prefix, std::size_t i) {
    std::string num = std::to_string(i);
    if (num.size() < 2) num = "0" + num;
    return prefix + num;
}

Rational random_cost(Rng& rng) {
    long num = static_cast<long>(rng.below(13));
    long den = static_cast<long>(rng.below(4)) + 1;
    return make_rational(num, den);
}

}  // namespace

Instance generate_instance(const GeneratorConfig& config) {
    if (config.nodes < 2 || config.nodes > 12)
        throw Error(ErrorCode::TooLarge, "generator accepts 2..12 nodes");
    Rng rng(config.seed);
    int n = config.nodes;

    RawInstance raw;
    raw.lambda = config.lambda;
    for (int i = 1; i <= n; ++i) raw.nodes.push_back(padded("v", static_cast<std::size_t>(i)));

    // random attachment tree, then extra edges (parallels allowed)
    std::vector<std::pair<int, int>> ends;
    for (int i = 1; i < n; ++i) {
        int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
        ends.emplace_back(parent, i);
    }
    for (int i = 0; i < config.extra_edges; ++i) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (v >= u) ++v;
        ends.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (std::size_t e = 0; e < ends.size(); ++e)
        raw.edges.push_back(RawEdge{padded("e", e + 1), raw.nodes[static_cast<std::size_t>(ends[e].first)],
                                    raw.nodes[static_cast<std::size_t>(ends[e].second)],
                                    random_cost(rng)});

    // nested chain: prefixes of a shuffled node order at distinct sizes
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    int want = std::min(std::min(config.chain_sets, 4), n - 1);
    std::vector<int> sizes;
    for (int s = 1; s <= n - 1; ++s) sizes.push_back(s);
    for (int i = static_cast<int>(sizes.size()) - 1; i > 0; --i)
        std::swap(sizes[static_cast<std::size_t>(i)],
                  sizes[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    sizes.resize(static_cast<std::size_t>(std::max(want, 0)));
    std::sort(sizes.begin(), sizes.end());

    // seeding spanning tree of the generated graph decides the bounds
    Graph probe(raw.nodes, [&] {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < ends.size(); ++e)
            edges.push_back(Edge{raw.edges[e].id, ends[e].first, ends[e].second, raw.edges[e].cost});
        return edges;
    }());
    auto trees = all_spanning_trees(probe);
    const Tree& seed_tree = trees[static_cast<std::size_t>(rng.below(trees.size()))];

    for (int size : sizes) {
        RawChainSet cs;
        NodeMask mask = 0;
        for (int i = 0; i < size; ++i) {
            cs.nodes.push_back(raw.nodes[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
            mask |= NodeMask(1) << perm[static_cast<std::size_t>(i)];
        }
        long crossing = 0;
        for (int e : seed_tree.edges)
            if (probe.edge_crosses(e, mask)) ++crossing;
        cs.bound = crossing + static_cast<long>(rng.below(static_cast<std::uint64_t>(config.slack + 1)));
        raw.chain.push_back(std::move(cs));
    }
    return validate_instance(raw);
}

BudgetedInstance generate_matroid_instance(const MatroidGeneratorConfig& config) {
    if (config.ground < 2 || config.ground > 10)
        throw Error(ErrorCode::TooLarge, "generator accepts 2..10 ground elements");
    Rng rng(config.seed ^ 0x6d61747236f49a3cULL);
    int n = config.ground;

    BudgetedInstance instance;
    switch (rng.below(3)) {
        case 0: {  // graphic over a random connected multigraph with n edges
            int nodes = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                                std::max(2, std::min(n, 6) - 1))));
            std::vector<std::string> node_ids;
            for (int i = 1; i <= nodes; ++i) node_ids.push_back(padded("w", static_cast<std::size_t>(i)));
            std::vector<Edge> edges;
            for (int i = 1; i < nodes; ++i) {
                int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
                edges.push_back(Edge{padded("e", edges.size() + 1), parent, i, Rational(0)});
            }
            while (static_cast<int>(edges.size()) < n) {
                int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(nodes)));
                int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nodes - 1)));
                if (v >= u) ++v;
                edges.push_back(Edge{padded("e", edges.size() + 1), std::min(u, v), std::max(u, v),
                                     Rational(0)});
            }
            instance.matroid = MatroidOracle::graphic(Graph(node_ids, edges));
            break;
        }
        case 1: {
            int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            instance.matroid = MatroidOracle::uniform(n, r);
            break;
        }
        default: {
            std::vector<std::vector<std::string>> blocks;
            std::vector<int> caps;
            int placed = 0;
            while (placed < n) {
                int width = 1 + static_cast<int>(rng.below(3));
                width = std::min(width, n - placed);
                std::vector<std::string> block;
                for (int i = 0; i < width; ++i)
                    block.push_back(padded("g", static_cast<std::size_t>(++placed)));
                blocks.push_back(std::move(block));
                caps.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(width))));
            }
            instance.matroid = MatroidOracle::partition(blocks, caps);
            break;
        }
    }

    int k = std::max(1, config.budget_count);
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> row;
        for (int e = 0; e < instance.matroid.size(); ++e) {
            long num = static_cast<long>(rng.below(9));
            long den = static_cast<long>(rng.below(2)) + 1;
            row.push_back(make_rational(num, den));
        }
        instance.lengths.push_back(std::move(row));
    }
    instance.objective_index = static_cast<std::size_t>(k - 1);

    if (config.force_feasible) {
        auto bases = all_bases(instance.matroid);
        ElemMask pick = 0;
        const auto& chosen = bases[static_cast<std::size_t>(rng.below(bases.size()))];
        for (int e : chosen) pick |= ElemMask(1) << e;
        for (int i = 0; i < k; ++i) {
            Rational slack = make_rational(static_cast<long>(rng.below(3)), 2);
            instance.budgets.push_back(instance.length_of(static_cast<std::size_t>(i), pick) + slack);
        }
    } else {
        for (int i = 0; i < k; ++i) {
            Rational total = 0;
            for (const auto& d : instance.lengths[static_cast<std::size_t>(i)]) total += d;
            Rational budget = total * make_rational(static_cast<long>(rng.below(5)) + 1, 12);
            instance.budgets.push_back(budget);
        }
    }
    validate_budgeted_instance(instance);
    return instance;
}

}  // namespace mcst
