#ifndef MCST_LAGRANGIAN_HPP
#define MCST_LAGRANGIAN_HPP

#include <map>
#include <vector>

#include "mcst/decomposition.hpp"
#include "mcst/instance.hpp"
#include "mcst/lp.hpp"

namespace mcst {

/// Optimal multipliers of (D_lambda): y on the chain rows, mu on the
/// spanning-tree rows (mu_S >= 0 for proper S; mu_V unrestricted).
struct DualCertificate {
    std::vector<Rational> y;          // by chain index
    std::map<NodeMask, Rational> mu;  // absent sets have mu 0
    Rational lambda;

    Rational mu_of(NodeMask set) const {
        auto it = mu.find(set);
        return it == mu.end() ? Rational(0) : it->second;
    }
    Rational weighted_bound_sum(const Chain& chain) const;  // sum b_S y_S
};

/// c^y_e = c_e + sum of y_S over chain sets crossed by e.
std::vector<Rational> perturbed_costs(const Graph& graph, const Chain& chain,
                                      const std::vector<Rational>& y);

/// Minimum spanning tree under the given costs; deterministic tie-break by
/// edge index. The independent (non-LP) route used by g_lambda.
struct MstResult {
    Rational value;
    std::vector<int> edges;
};
MstResult minimum_spanning_tree(const Graph& graph, const std::vector<Rational>& costs);

/// g_lambda(y) = (MST weight under c^y) - lambda * sum b_S y_S.
Rational lagrangian_value(const Instance& instance, const Rational& lambda,
                          const std::vector<Rational>& y);

/// Maps the LP duals of (P_lambda) onto (mu, y) and verifies dual
/// feasibility plus every complementary-slackness identity exactly.
DualCertificate extract_duals(const Instance& instance, const Rational& lambda,
                              const ChainLpResult& lp);

struct Lemma3Report {
    Rational g_value;       // g_lambda(y*) via the MST route
    Rational psi_value;     // Psi_{lambda,y*}(x*)
    Rational opt_lambda;    // OPT(lambda)
};
Lemma3Report verify_lemma3(const Instance& instance, const Rational& lambda,
                           const FractionalPoint& x_star, const DualCertificate& cert,
                           const Rational& opt_lambda);

struct Lemma4Report {
    // per family member: the common perturbed cost of its support piece
    // edges (unset when the piece has no support edge)
    std::vector<std::pair<NodeMask, std::optional<Rational>>> piece_values;
};
Lemma4Report verify_lemma4(const FractionalPoint& x_star, const LaminarDecomposition& decomp,
                           const std::vector<Rational>& perturbed, const Graph& graph);

struct Lemma6Report {
    Rational bound_sum;  // sum b_S y*_S
    Rational gap_bound;  // (OPT(1) - OPT(lambda)) / (lambda - 1)
};
Lemma6Report verify_lemma6(const Rational& opt1, const Rational& opt_lambda,
                           const Rational& lambda, const DualCertificate& cert,
                           const Chain& chain);

}  // namespace mcst

#endif
