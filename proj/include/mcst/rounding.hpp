#ifndef MCST_ROUNDING_HPP
#define MCST_ROUNDING_HPP

#include <cstdint>
#include <vector>

#include "mcst/decomposition.hpp"
#include "mcst/instance.hpp"
#include "mcst/lagrangian.hpp"
#include "mcst/rainbow.hpp"

namespace mcst {

struct RoundingOptions {
    std::uint64_t search_budget = 10'000'000;  // branch-and-bound node budget
};

/// Exact rounder meeting the face-preserving contract: picks one spanning
/// tree inside the support of every piece of the (rainbow-free)
/// decomposition, minimizing the worst crossing ratio over the chain, and
/// asserts the 9x contract. Ties break to the lexicographically smallest
/// edge-identifier sequence.
Tree face_preserving_round(const FractionalPoint& x_prime, const LaminarDecomposition& decomp,
                           const Graph& graph, const Chain& chain,
                           const RoundingOptions& options = {});

/// True iff supp(tree) lies in supp(x) and every subset constraint tight at
/// x stays tight at the tree (full subset enumeration).
bool is_on_minimal_face(const FractionalPoint& x, const Tree& tree, const Graph& graph);

struct RoundingCertificate {
    Rational lambda;
    Rational opt1;
    Rational opt_lambda;
    FractionalPoint x_star;
    FractionalPoint x_prime;
    DualCertificate duals;
    Tree tree;
    Rational cost;                      // c(T)
    Rational perturbed_tree_cost;       // c^{y*}(T)
    Rational perturbed_fractional_cost; // sum_e c^{y*}_e x*_e
    std::vector<long> crossings;        // |delta_T(S)| per chain set
    std::vector<Rational> crossing_ratios;  // vs x'(delta(S)); 0 when both are 0
    Lemma3Report lemma3;
    Lemma4Report lemma4;
    Lemma6Report lemma6;
    std::vector<NodeMask> family;        // decomposition of x*
    std::vector<NodeMask> family_prime;  // decomposition of x'
};

/// End-to-end pipeline: solve the inflated chain LP, decompose, make the
/// decomposition rainbow-free, round, and assert every certified bound
/// (cost ratio, 9*lambda crossings, the perturbed-cost identities, minimal-
/// face membership, and piece tightness for the input family).
RoundingCertificate mcst_pipeline(const Instance& instance, const Rational& lambda,
                                  const RoundingOptions& options = {});

}  // namespace mcst

#endif
