#ifndef MCST_GENERATOR_HPP
#define MCST_GENERATOR_HPP

#include <cstdint>

#include "mcst/instance.hpp"
#include "mcst/matroid.hpp"

namespace mcst {

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int nodes = 6;
    int extra_edges = 3;   // edges beyond the seeding spanning tree
    int chain_sets = 2;    // capped at min(4, nodes - 1)
    long slack = 1;        // bound slack above the seeding tree's cuts
    Rational lambda = Rational(2);
};

/// Seeded deterministic generator. Bounds come from a random spanning tree's
/// actual cuts plus slack, so the un-inflated LP is feasible by construction.
Instance generate_instance(const GeneratorConfig& config);

struct MatroidGeneratorConfig {
    std::uint64_t seed = 1;
    int ground = 6;   // capped at 10
    int budget_count = 2;  // k
    bool force_feasible = true;  // budgets from a random basis plus slack
};

/// Seeded random budgeted-matroid instances over graphic / uniform /
/// partition matroids with small rational lengths.
BudgetedInstance generate_matroid_instance(const MatroidGeneratorConfig& config);

}  // namespace mcst

#endif
