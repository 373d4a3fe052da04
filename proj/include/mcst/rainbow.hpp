#ifndef MCST_RAINBOW_HPP
#define MCST_RAINBOW_HPP

#include <vector>

#include "mcst/decomposition.hpp"
#include "mcst/instance.hpp"
#include "mcst/lp.hpp"

namespace mcst {

/// Two support edges of one piece whose crossed chain sets are nested
/// (equality included).
struct RainbowReport {
    NodeMask piece = 0;
    int edge_e = -1;
    int edge_f = -1;
    bool e_subset_of_f = false;  // S_e subseteq S_f; otherwise S_f subseteq S_e
};

/// All rainbow pairs, pieces in family order, pairs by ascending edge index.
/// Empty iff the decomposition is rainbow-free.
std::vector<RainbowReport> find_rainbows(const FractionalPoint& x,
                                         const LaminarDecomposition& decomp,
                                         const Graph& graph, const Chain& chain);

struct RainbowFreeResult {
    FractionalPoint x_prime;
    LaminarDecomposition decomp_prime;
    std::vector<int> sorted_support;  // the weighting order used by (P')
};

/// Rainbow-free conversion via the potential LP: weights are ranks of supp(x)
/// sorted by |S_e| (ties by edge identifier); minimizes them over the points
/// of the spanning-tree polytope that keep supp(x), the chain cut loads of x,
/// and tightness of every input family member. Asserts supp(x') <= supp(x),
/// family extension, cut non-increase, and rainbow-freeness of the output.
RainbowFreeResult make_rainbow_free(const FractionalPoint& x, const LaminarDecomposition& decomp,
                                    const Instance& instance,
                                    const SolverOptions& options = {});

}  // namespace mcst

#endif
