#include "mcst/lagrangian.hpp"

#include <algorithm>
#include <bit>

#include "mcst/dsu.hpp"
#include "mcst/error.hpp"

namespace mcst {

Rational DualCertificate::weighted_bound_sum(const Chain& chain) const {
    Rational total = 0;
    for (std::size_t i = 0; i < chain.size(); ++i)
        total += Rational(chain.set(i).bound) * y[i];
    return total;
}

std::vector<Rational> perturbed_costs(const Graph& graph, const Chain& chain,
                                      const std::vector<Rational>& y) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(graph.edge_count()));
    for (int e = 0; e < graph.edge_count(); ++e) {
        Rational c = graph.edge(e).cost;
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (graph.edge_crosses(e, chain.set(i).mask)) c += y[i];
        out.push_back(c);
    }
    return out;
}

MstResult minimum_spanning_tree(const Graph& graph, const std::vector<Rational>& costs) {
    std::vector<int> order(static_cast<std::size_t>(graph.edge_count()));
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = static_cast<int>(e);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return costs[static_cast<std::size_t>(a)] < costs[static_cast<std::size_t>(b)];
    });
    Dsu dsu(static_cast<std::size_t>(graph.node_count()));
    MstResult result{Rational(0), {}};
    for (int e : order) {
        const Edge& ed = graph.edge(e);
        if (dsu.unite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) {
            result.value += costs[static_cast<std::size_t>(e)];
            result.edges.push_back(e);
        }
    }
    if (result.edges.size() + 1 != static_cast<std::size_t>(graph.node_count()))
        throw Error(ErrorCode::InternalInvariant, "MST on a disconnected graph");
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

Rational lagrangian_value(const Instance& instance, const Rational& lambda,
                          const std::vector<Rational>& y) {
    for (const auto& v : y)
        if (v < 0) throw Error(ErrorCode::InternalInvariant, "lagrangian multipliers must be >= 0");
    std::vector<Rational> costs = perturbed_costs(instance.graph, instance.chain, y);
    MstResult mst = minimum_spanning_tree(instance.graph, costs);
    Rational dualized = 0;
    for (std::size_t i = 0; i < instance.chain.size(); ++i)
        dualized += Rational(instance.chain.set(i).bound) * y[i];
    return mst.value - lambda * dualized;
}

DualCertificate extract_duals(const Instance& instance, const Rational& lambda,
                              const ChainLpResult& lp) {
    if (lp.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant, "extract_duals needs an optimal LP solution");
    const Graph& graph = instance.graph;
    const Chain& chain = instance.chain;

    DualCertificate cert;
    cert.lambda = lambda;
    cert.y.assign(chain.size(), Rational(0));
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Rational pi = lp.solution.dual_of(degree_row_tag(i));
        cert.y[i] = -pi;
        if (cert.y[i] < 0)
            throw Error(ErrorCode::CsViolation, "negative multiplier on " + degree_row_tag(i));
    }
    for (const LinRow& row : lp.system.rows()) {
        if (row.tag == "span") {
            cert.mu[graph.full_mask()] = -lp.solution.dual_of(row.tag);
        } else if (row.tag.rfind("st:", 0) == 0) {
            std::vector<std::string> ids;
            std::string body = row.tag.substr(3);
            std::size_t start = 0;
            while (start <= body.size()) {
                std::size_t comma = body.find(',', start);
                if (comma == std::string::npos) {
                    ids.push_back(body.substr(start));
                    break;
                }
                ids.push_back(body.substr(start, comma - start));
                start = comma + 1;
            }
            NodeMask mask = graph.mask_of(ids);
            Rational mu = -lp.solution.dual_of(row.tag);
            if (mu != 0) cert.mu[mask] = mu;
            if (mu < 0)
                throw Error(ErrorCode::CsViolation, "negative multiplier on " + row.tag);
        }
    }

    const std::vector<Rational>& x = lp.point.values;
    std::vector<Rational> perturbed = perturbed_costs(graph, chain, cert.y);

    // complementary slackness and dual feasibility of (D_lambda)
    for (const auto& [mask, mu] : cert.mu) {
        if (mask == graph.full_mask() || mu == 0) continue;
        if (inside_value(graph, x, mask) != std::popcount(mask) - 1)
            throw Error(ErrorCode::CsViolation,
                        "mu positive on a slack subset row " + graph.set_key(mask));
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (cert.y[i] == 0) continue;
        if (cut_value(graph, x, chain.set(i).mask) != lambda * Rational(chain.set(i).bound))
            throw Error(ErrorCode::CsViolation,
                        "y positive on a slack degree row " + degree_row_tag(i));
    }
    for (int e = 0; e < graph.edge_count(); ++e) {
        Rational mu_sum = 0;
        for (const auto& [mask, mu] : cert.mu)
            if (graph.edge_inside(e, mask)) mu_sum += mu;
        Rational y_sum = 0;
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (graph.edge_crosses(e, chain.set(i).mask)) y_sum += cert.y[i];
        if (-mu_sum - y_sum > graph.edge(e).cost)
            throw Error(ErrorCode::CsViolation,
                        "dual infeasible at edge " + graph.edge(e).id);
        if (x[static_cast<std::size_t>(e)] > 0 &&
            perturbed[static_cast<std::size_t>(e)] != -mu_sum)
            throw Error(ErrorCode::CsViolation,
                        "support edge with nonzero reduced cost: " + graph.edge(e).id);
    }

    // dual objective must equal OPT(lambda)
    Rational dual_value = 0;
    for (const auto& [mask, mu] : cert.mu)
        dual_value -= Rational(std::popcount(mask) - 1) * mu;
    for (std::size_t i = 0; i < chain.size(); ++i)
        dual_value -= lambda * Rational(chain.set(i).bound) * cert.y[i];
    if (dual_value != lp.opt)
        throw Error(ErrorCode::CsViolation, "dual objective differs from OPT(lambda)");
    return cert;
}

Lemma3Report verify_lemma3(const Instance& instance, const Rational& lambda,
                           const FractionalPoint& x_star, const DualCertificate& cert,
                           const Rational& opt_lambda) {
    Lemma3Report report;
    report.g_value = lagrangian_value(instance, lambda, cert.y);
    std::vector<Rational> perturbed = perturbed_costs(instance.graph, instance.chain, cert.y);
    Rational psi = 0;
    for (int e = 0; e < instance.graph.edge_count(); ++e)
        psi += perturbed[static_cast<std::size_t>(e)] * x_star.values[static_cast<std::size_t>(e)];
    psi -= lambda * cert.weighted_bound_sum(instance.chain);
    report.psi_value = psi;
    report.opt_lambda = opt_lambda;
    if (report.g_value != report.psi_value || report.psi_value != opt_lambda)
        throw Error(ErrorCode::LemmaViolation,
                    "g=" + rational_to_string(report.g_value) +
                        " psi=" + rational_to_string(report.psi_value) +
                        " opt=" + rational_to_string(opt_lambda));
    return report;
}

Lemma4Report verify_lemma4(const FractionalPoint& x_star, const LaminarDecomposition& decomp,
                           const std::vector<Rational>& perturbed, const Graph& graph) {
    Lemma4Report report;
    for (const Piece& piece : decomp.pieces) {
        std::optional<Rational> value;
        for (int e : piece.piece_edges) {
            if (x_star.values[static_cast<std::size_t>(e)] == 0) continue;
            const Rational& c = perturbed[static_cast<std::size_t>(e)];
            if (!value) {
                value = c;
            } else if (*value != c) {
                throw Error(ErrorCode::LemmaViolation,
                            "piece " + graph.set_key(piece.set) +
                                " carries support edges of unequal perturbed cost (" +
                                graph.edge(e).id + ")");
            }
        }
        report.piece_values.emplace_back(piece.set, value);
    }
    return report;
}

Lemma6Report verify_lemma6(const Rational& opt1, const Rational& opt_lambda,
                           const Rational& lambda, const DualCertificate& cert,
                           const Chain& chain) {
    if (lambda <= 1)
        throw Error(ErrorCode::InternalInvariant, "the lemma6 bound needs lambda > 1");
    Lemma6Report report;
    report.bound_sum = cert.weighted_bound_sum(chain);
    report.gap_bound = (opt1 - opt_lambda) / (lambda - 1);
    if (report.bound_sum > report.gap_bound)
        throw Error(ErrorCode::LemmaViolation,
                    "sum " + rational_to_string(report.bound_sum) + " exceeds bound " +
                        rational_to_string(report.gap_bound));
    return report;
}

}  // namespace mcst
