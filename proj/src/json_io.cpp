#include "mcst/json_io.hpp"

#include <algorithm>
#include <bit>

#include "mcst/error.hpp"

namespace mcst {

namespace {

std::string status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

[[noreturn]] void bad(const std::string& message) {
    throw Error(ErrorCode::ValidationFailed, message);
}

const Json& field(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) bad(std::string("missing field: ") + key);
    return *it;
}

}  // namespace

Json rational_to_json(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return Json{{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

Rational rational_from_json(const Json& value) {
    if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
    if (value.is_number()) bad("non-integral numeric literals are inexact; use a string");
    if (value.is_string()) {
        try {
            return rational_from_string(value.get<std::string>());
        } catch (const std::exception& e) {
            bad("malformed rational literal: " + value.get<std::string>());
        }
    }
    if (value.is_object()) {
        const Json& num = field(value, "num");
        const Json& den = field(value, "den");
        auto to_int = [](const Json& v) {
            if (v.is_number_integer()) return Integer(static_cast<long>(v.get<long long>()));
            if (v.is_string()) {
                Integer value;
                if (value.set_str(v.get<std::string>(), 10) != 0)
                    bad("malformed integer literal: " + v.get<std::string>());
                return value;
            }
            bad("num/den must be integers or integer strings");
            return Integer(0);
        };
        return make_rational(to_int(num), to_int(den));
    }
    bad("expected rational (integer, string, or {num,den})");
    return Rational(0);
}

RawInstance instance_from_json(const Json& doc) {
    RawInstance raw;
    if (!doc.is_object()) bad("instance document must be an object");
    for (const Json& node : field(doc, "nodes")) {
        if (!node.is_string()) bad("node identifiers must be strings");
        raw.nodes.push_back(node.get<std::string>());
    }
    for (const Json& edge : field(doc, "edges")) {
        RawEdge re;
        re.id = field(edge, "id").get<std::string>();
        re.u = field(edge, "u").get<std::string>();
        re.v = field(edge, "v").get<std::string>();
        re.cost = rational_from_json(field(edge, "cost"));
        raw.edges.push_back(std::move(re));
    }
    if (doc.contains("chain")) {
        for (const Json& cs : doc["chain"]) {
            RawChainSet rc;
            for (const Json& id : field(cs, "set")) rc.nodes.push_back(id.get<std::string>());
            const Json& bound = field(cs, "bound");
            if (bound.is_number_integer()) {
                rc.bound = bound.get<long>();
            } else if (bound.is_string()) {
                rc.bound = std::stol(bound.get<std::string>());
            } else {
                bad("chain bounds must be integers");
            }
            raw.chain.push_back(std::move(rc));
        }
    }
    return raw;
}

Json instance_to_json(const Instance& instance) {
    Json doc;
    doc["nodes"] = instance.graph.nodes();
    Json edges = Json::array();
    for (const Edge& e : instance.graph.edges()) {
        Json edge;
        edge["id"] = e.id;
        edge["u"] = instance.graph.nodes()[static_cast<std::size_t>(e.u)];
        edge["v"] = instance.graph.nodes()[static_cast<std::size_t>(e.v)];
        edge["cost"] = rational_to_json(e.cost);
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    Json chain = Json::array();
    for (std::size_t i = 0; i < instance.chain.size(); ++i) {
        Json cs;
        cs["set"] = instance.graph.ids_of(instance.chain.set(i).mask);
        cs["bound"] = instance.chain.set(i).bound;
        chain.push_back(std::move(cs));
    }
    doc["chain"] = std::move(chain);
    return doc;
}

Json point_to_json(const Graph& graph, const FractionalPoint& point) {
    Json doc = Json::object();
    for (int e = 0; e < graph.edge_count(); ++e)
        doc[graph.edge(e).id] = rational_to_json(point.values[static_cast<std::size_t>(e)]);
    return doc;
}

FractionalPoint point_from_json(const Graph& graph, const Json& doc) {
    std::vector<Rational> values(static_cast<std::size_t>(graph.edge_count()), Rational(0));
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        int e = graph.edge_index(it.key());
        if (e < 0) throw Error(ErrorCode::UnknownEdge, it.key());
        values[static_cast<std::size_t>(e)] = rational_from_json(it.value());
    }
    return FractionalPoint{std::move(values)};
}

Json solution_to_json(const ConstraintSystem& system, const LPSolution& solution) {
    Json doc;
    doc["status"] = status_name(solution.status);
    if (solution.status != SolveStatus::Optimal) return doc;
    doc["value"] = rational_to_json(solution.value);
    Json primal = Json::object();
    for (int j = 0; j < system.variable_count(); ++j)
        primal[system.variables()[static_cast<std::size_t>(j)]] =
            rational_to_json(solution.primal[static_cast<std::size_t>(j)]);
    doc["primal"] = std::move(primal);
    Json dual = Json::object();
    for (const auto& [tag, value] : solution.dual)
        if (value != 0) dual[tag] = rational_to_json(value);
    doc["dual"] = std::move(dual);
    doc["is_vertex"] = solution.is_vertex;
    return doc;
}

Json chain_lp_to_json(const ChainLpResult& result) {
    Json doc = solution_to_json(result.system, result.solution);
    if (result.status == SolveStatus::Optimal) doc["opt"] = rational_to_json(result.opt);
    return doc;
}

Json decomposition_to_json(const Graph& graph, const LaminarDecomposition& decomp) {
    Json doc;
    Json family = Json::array();
    for (NodeMask set : decomp.family.sets) family.push_back(graph.ids_of(set));
    doc["family"] = std::move(family);
    Json pieces = Json::object();
    for (const Piece& piece : decomp.pieces) {
        Json entry;
        Json children = Json::array();
        for (NodeMask child : piece.children) children.push_back(graph.set_key(child));
        entry["nodes"] = std::move(children);
        Json edges = Json::array();
        for (int e : piece.piece_edges) edges.push_back(graph.edge(e).id);
        entry["edges"] = std::move(edges);
        pieces[graph.set_key(piece.set)] = std::move(entry);
    }
    doc["pieces"] = std::move(pieces);
    return doc;
}

Json rainbow_result_to_json(const Instance& instance, const FractionalPoint& x_before,
                            const LaminarDecomposition& decomp_before,
                            const RainbowFreeResult& result) {
    const Graph& graph = instance.graph;
    Json doc;
    doc["x_prime"] = point_to_json(graph, result.x_prime);
    Json family = Json::array();
    for (NodeMask set : result.decomp_prime.family.sets) family.push_back(graph.ids_of(set));
    doc["family_prime"] = std::move(family);
    auto report = [&](const std::vector<RainbowReport>& rainbows) {
        Json arr = Json::array();
        for (const RainbowReport& r : rainbows) {
            Json entry;
            entry["piece"] = graph.set_key(r.piece);
            entry["e"] = graph.edge(r.edge_e).id;
            entry["f"] = graph.edge(r.edge_f).id;
            entry["relation"] = r.e_subset_of_f ? "S_e <= S_f" : "S_f <= S_e";
            arr.push_back(std::move(entry));
        }
        return arr;
    };
    doc["rainbows_before"] =
        report(find_rainbows(x_before, decomp_before, graph, instance.chain));
    doc["rainbows_after"] =
        report(find_rainbows(result.x_prime, result.decomp_prime, graph, instance.chain));
    return doc;
}

Json dual_certificate_to_json(const Graph& graph, const DualCertificate& cert) {
    Json doc;
    Json y = Json::object();
    for (std::size_t i = 0; i < cert.y.size(); ++i)
        y["S" + std::to_string(i + 1)] = rational_to_json(cert.y[i]);
    doc["y"] = std::move(y);
    Json mu = Json::object();
    for (const auto& [mask, value] : cert.mu)
        if (value != 0) mu[graph.set_key(mask)] = rational_to_json(value);
    doc["mu"] = std::move(mu);
    doc["lambda"] = rational_to_json(cert.lambda);
    return doc;
}

Json pipeline_certificate_to_json(const Instance& instance, const RoundingCertificate& cert) {
    const Graph& graph = instance.graph;
    Json doc;
    doc["lambda"] = rational_to_json(cert.lambda);
    doc["opt1"] = rational_to_json(cert.opt1);
    doc["opt_lambda"] = rational_to_json(cert.opt_lambda);
    doc["x_star"] = point_to_json(graph, cert.x_star);
    doc["x_prime"] = point_to_json(graph, cert.x_prime);
    doc["duals"] = dual_certificate_to_json(graph, cert.duals);
    Json family = Json::array();
    for (NodeMask set : cert.family) family.push_back(graph.ids_of(set));
    doc["family"] = std::move(family);
    Json family_prime = Json::array();
    for (NodeMask set : cert.family_prime) family_prime.push_back(graph.ids_of(set));
    doc["family_prime"] = std::move(family_prime);
    doc["tree"] = cert.tree.ids(graph);
    doc["cost"] = rational_to_json(cert.cost);
    doc["perturbed_tree_cost"] = rational_to_json(cert.perturbed_tree_cost);
    doc["perturbed_fractional_cost"] = rational_to_json(cert.perturbed_fractional_cost);
    Json crossings = Json::object();
    Json ratios = Json::object();
    for (std::size_t i = 0; i < cert.crossings.size(); ++i) {
        crossings["S" + std::to_string(i + 1)] = cert.crossings[i];
        ratios["S" + std::to_string(i + 1)] = rational_to_json(cert.crossing_ratios[i]);
    }
    doc["crossings"] = std::move(crossings);
    doc["crossing_ratios"] = std::move(ratios);
    Json lemma3;
    lemma3["g"] = rational_to_json(cert.lemma3.g_value);
    lemma3["psi"] = rational_to_json(cert.lemma3.psi_value);
    lemma3["opt_lambda"] = rational_to_json(cert.lemma3.opt_lambda);
    doc["lemma3"] = std::move(lemma3);
    Json lemma4 = Json::object();
    for (const auto& [set, value] : cert.lemma4.piece_values)
        lemma4[graph.set_key(set)] = value ? rational_to_json(*value) : Json(nullptr);
    doc["lemma4"] = std::move(lemma4);
    Json lemma6;
    lemma6["bound_sum"] = rational_to_json(cert.lemma6.bound_sum);
    lemma6["gap_bound"] = rational_to_json(cert.lemma6.gap_bound);
    doc["lemma6"] = std::move(lemma6);
    return doc;
}

std::vector<std::string> recheck_pipeline_certificate(const Instance& instance, const Json& cert) {
    std::vector<std::string> out;
    const Graph& graph = instance.graph;
    const Chain& chain = instance.chain;
    try {
        Rational lambda = rational_from_json(field(cert, "lambda"));
        Rational opt1 = rational_from_json(field(cert, "opt1"));
        Rational opt_lambda = rational_from_json(field(cert, "opt_lambda"));
        FractionalPoint x_star = point_from_json(graph, field(cert, "x_star"));
        FractionalPoint x_prime = point_from_json(graph, field(cert, "x_prime"));
        Rational cost = rational_from_json(field(cert, "cost"));
        for (const auto& v : x_prime.values)
            if (v < 0 || v > 1) out.push_back("x' leaves the unit box");

        // stated LP values must reproduce
        ChainLpResult base = solve_chain_lp(instance, Rational(1));
        if (base.status != SolveStatus::Optimal || base.opt != opt1)
            out.push_back("stated OPT(1) does not reproduce");
        ChainLpResult inflated = solve_chain_lp(instance, lambda);
        if (inflated.status != SolveStatus::Optimal || inflated.opt != opt_lambda)
            out.push_back("stated OPT(lambda) does not reproduce");

        // x* feasibility and objective
        Rational direct = 0;
        for (int e = 0; e < graph.edge_count(); ++e)
            direct += graph.edge(e).cost * x_star.values[static_cast<std::size_t>(e)];
        if (direct != opt_lambda) out.push_back("x* objective differs from OPT(lambda)");
        try {
            (void)tight_sets(x_star, graph);
        } catch (const Error&) {
            out.push_back("x* outside the spanning-tree polytope");
        }
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (cut_value(graph, x_star.values, chain.set(i).mask) >
                lambda * Rational(chain.set(i).bound))
                out.push_back("x* violates an inflated degree bound");

        // dual certificate: feasibility, slackness, objective
        const Json& duals = field(cert, "duals");
        std::vector<Rational> y(chain.size(), Rational(0));
        for (auto it = field(duals, "y").begin(); it != field(duals, "y").end(); ++it) {
            const std::string& key = it.key();
            if (key.size() < 2 || key[0] != 'S') {
                out.push_back("malformed multiplier key " + key);
                continue;
            }
            std::size_t idx = std::stoul(key.substr(1));
            if (idx < 1 || idx > chain.size()) {
                out.push_back("multiplier for an unknown chain set " + key);
                continue;
            }
            y[idx - 1] = rational_from_json(it.value());
            if (y[idx - 1] < 0) out.push_back("negative y multiplier");
        }
        std::map<NodeMask, Rational> mu;
        for (auto it = field(duals, "mu").begin(); it != field(duals, "mu").end(); ++it) {
            std::vector<std::string> ids;
            std::string key = it.key();
            std::size_t start = 0;
            while (start <= key.size()) {
                std::size_t comma = key.find(',', start);
                if (comma == std::string::npos) {
                    ids.push_back(key.substr(start));
                    break;
                }
                ids.push_back(key.substr(start, comma - start));
                start = comma + 1;
            }
            NodeMask mask = graph.mask_of(ids);
            mu[mask] = rational_from_json(it.value());
            if (mask != graph.full_mask() && mu[mask] < 0)
                out.push_back("negative mu on a proper subset");
        }
        Rational dual_value = 0;
        for (const auto& [mask, value] : mu)
            dual_value -= Rational(std::popcount(mask) - 1) * value;
        for (std::size_t i = 0; i < chain.size(); ++i)
            dual_value -= lambda * Rational(chain.set(i).bound) * y[i];
        if (dual_value != opt_lambda) out.push_back("dual objective differs from OPT(lambda)");
        for (int e = 0; e < graph.edge_count(); ++e) {
            Rational mu_sum = 0;
            for (const auto& [mask, value] : mu)
                if (graph.edge_inside(e, mask)) mu_sum += value;
            Rational y_sum = 0;
            for (std::size_t i = 0; i < chain.size(); ++i)
                if (graph.edge_crosses(e, chain.set(i).mask)) y_sum += y[i];
            if (-mu_sum - y_sum > graph.edge(e).cost)
                out.push_back("dual infeasible at " + graph.edge(e).id);
            if (x_star.values[static_cast<std::size_t>(e)] > 0 &&
                graph.edge(e).cost + y_sum != -mu_sum)
                out.push_back("slackness fails at " + graph.edge(e).id);
        }
        for (const auto& [mask, value] : mu) {
            if (value == 0 || mask == graph.full_mask()) continue;
            if (inside_value(graph, x_star.values, mask) != std::popcount(mask) - 1)
                out.push_back("mu positive on slack subset " + graph.set_key(mask));
        }
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (y[i] == 0) continue;
            if (cut_value(graph, x_star.values, chain.set(i).mask) !=
                lambda * Rational(chain.set(i).bound))
                out.push_back("y positive on slack degree row S" + std::to_string(i + 1));
        }

        // the lemma3 identity via the MST route
        Rational dualized = 0;
        for (std::size_t i = 0; i < chain.size(); ++i)
            dualized += Rational(chain.set(i).bound) * y[i];
        std::vector<Rational> perturbed = perturbed_costs(graph, chain, y);
        Rational g = minimum_spanning_tree(graph, perturbed).value - lambda * dualized;
        if (g != opt_lambda) out.push_back("g_lambda(y*) differs from OPT(lambda)");

        // x' and the tree
        std::vector<int> tree_edges;
        for (const Json& id : field(cert, "tree")) {
            int e = graph.edge_index(id.get<std::string>());
            if (e < 0) {
                out.push_back("tree references unknown edge");
                continue;
            }
            tree_edges.push_back(e);
        }
        std::sort(tree_edges.begin(), tree_edges.end());
        if (!is_spanning_tree(graph, tree_edges)) out.push_back("tree is not spanning");
        for (int e = 0; e < graph.edge_count(); ++e) {
            if (x_prime.values[static_cast<std::size_t>(e)] > 0 &&
                x_star.values[static_cast<std::size_t>(e)] == 0)
                out.push_back("supp(x') exceeds supp(x*)");
        }
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (cut_value(graph, x_prime.values, chain.set(i).mask) >
                cut_value(graph, x_star.values, chain.set(i).mask))
                out.push_back("x' increases a chain cut");
        Rational tree_cost = 0;
        Rational tree_perturbed = 0;
        for (int e : tree_edges) {
            tree_cost += graph.edge(e).cost;
            tree_perturbed += perturbed[static_cast<std::size_t>(e)];
            if (x_prime.values[static_cast<std::size_t>(e)] == 0)
                out.push_back("tree uses an edge outside supp(x')");
        }
        if (tree_cost != cost) out.push_back("stated cost differs from the tree cost");
        if ((lambda - 1) * cost > lambda * opt1) out.push_back("cost bound fails");
        for (std::size_t i = 0; i < chain.size(); ++i) {
            long crossing = 0;
            for (int e : tree_edges)
                if (graph.edge_crosses(e, chain.set(i).mask)) ++crossing;
            if (Rational(crossing) > 9 * lambda * Rational(chain.set(i).bound))
                out.push_back("crossing bound fails on S" + std::to_string(i + 1));
        }
        Rational frac_perturbed = 0;
        for (int e = 0; e < graph.edge_count(); ++e)
            frac_perturbed +=
                perturbed[static_cast<std::size_t>(e)] * x_star.values[static_cast<std::size_t>(e)];
        if (tree_perturbed != frac_perturbed)
            out.push_back("perturbed tree cost differs from the fractional mass");
        Tree tree{tree_edges};
        if (!is_on_minimal_face(x_prime, tree, graph))
            out.push_back("tree leaves the minimal face of x'");
    } catch (const std::exception& e) {
        out.push_back(std::string("certificate unreadable: ") + e.what());
    }
    return out;
}

MatroidOracle matroid_from_json(const Json& doc) {
    std::string kind = field(doc, "kind").get<std::string>();
    if (kind == "graphic") {
        const Json& g = field(doc, "graph");
        std::vector<std::string> nodes;
        for (const Json& node : field(g, "nodes")) nodes.push_back(node.get<std::string>());
        std::vector<Edge> edges;
        for (const Json& edge : field(g, "edges")) {
            std::string u = field(edge, "u").get<std::string>();
            std::string v = field(edge, "v").get<std::string>();
            auto pos = [&](const std::string& id) {
                for (std::size_t i = 0; i < nodes.size(); ++i)
                    if (nodes[i] == id) return static_cast<int>(i);
                bad("edge references unknown node " + id);
                return -1;
            };
            edges.push_back(
                Edge{field(edge, "id").get<std::string>(), pos(u), pos(v), Rational(0)});
        }
        return MatroidOracle::graphic(Graph(nodes, edges));
    }
    if (kind == "uniform") {
        return MatroidOracle::uniform(field(doc, "n").get<int>(), field(doc, "r").get<int>());
    }
    if (kind == "partition") {
        std::vector<std::vector<std::string>> blocks;
        for (const Json& block : field(doc, "blocks")) {
            std::vector<std::string> ids;
            for (const Json& id : block) ids.push_back(id.get<std::string>());
            blocks.push_back(std::move(ids));
        }
        std::vector<int> caps;
        for (const Json& cap : field(doc, "caps")) caps.push_back(cap.get<int>());
        return MatroidOracle::partition(blocks, caps);
    }
    bad("unknown matroid kind: " + kind);
    return {};
}

BudgetedInstance budgeted_instance_from_json(const Json& doc) {
    BudgetedInstance instance;
    instance.matroid = matroid_from_json(field(doc, "matroid"));
    const Json& budgets = field(doc, "budgets");
    for (const Json& row : field(budgets, "d")) {
        std::vector<Rational> d;
        for (const Json& v : row) d.push_back(rational_from_json(v));
        instance.lengths.push_back(std::move(d));
    }
    for (const Json& v : field(budgets, "B")) instance.budgets.push_back(rational_from_json(v));
    int k = field(budgets, "objective_index").get<int>();
    if (k < 1 || static_cast<std::size_t>(k) > instance.lengths.size())
        bad("objective_index is 1-based into d");
    instance.objective_index = static_cast<std::size_t>(k - 1);
    validate_budgeted_instance(instance);
    return instance;
}

PackingProblem packing_problem_from_json(const Json& doc) {
    PackingProblem problem;
    for (const Json& name : field(doc, "variables"))
        problem.polytope.variables.push_back(name.get<std::string>());
    auto var_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < problem.polytope.variables.size(); ++i)
            if (problem.polytope.variables[i] == name) return static_cast<int>(i);
        bad("row references unknown variable " + name);
        return -1;
    };
    std::vector<LinRow> rows;
    for (const Json& row : field(doc, "rows")) {
        LinRow lin;
        lin.tag = field(row, "tag").get<std::string>();
        std::string sense = field(row, "sense").get<std::string>();
        if (sense == "<=")
            lin.sense = Sense::Le;
        else if (sense == ">=")
            lin.sense = Sense::Ge;
        else if (sense == "=" || sense == "==")
            lin.sense = Sense::Eq;
        else
            bad("row sense must be <=, >= or =");
        lin.rhs = rational_from_json(field(row, "rhs"));
        for (auto it = field(row, "coeffs").begin(); it != field(row, "coeffs").end(); ++it)
            lin.coeffs[var_index(it.key())] = rational_from_json(it.value());
        rows.push_back(std::move(lin));
    }
    for (LinRow& row : rows) {
        if (row.sense == Sense::Eq)
            problem.polytope.eq_rows.push_back(row);
        else
            problem.polytope.initial_rows.push_back(row);
    }
    problem.polytope.all_rows = [rows]() { return rows; };
    for (const Json& row : field(doc, "A")) {
        std::vector<Rational> line;
        for (const Json& v : row) line.push_back(rational_from_json(v));
        problem.A.push_back(std::move(line));
    }
    for (const Json& v : field(doc, "b")) problem.b.push_back(rational_from_json(v));
    for (const Json& v : field(doc, "c")) problem.c.push_back(rational_from_json(v));
    return problem;
}

Json reduction_result_to_json(const PackingProblem& problem, const ReductionResult& result) {
    Json doc;
    doc["feasible"] = result.feasible;
    if (!result.feasible) return doc;
    const ReductionCertificate& cert = result.certificate;
    doc["opt_base"] = rational_to_json(cert.opt_base);
    doc["opt_relaxed"] = rational_to_json(cert.opt_relaxed);
    auto vec = [&](const std::vector<Rational>& values, bool by_var) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::string key = by_var ? problem.polytope.variables[i] : problem.tag_of(i);
            obj[key] = rational_to_json(values[i]);
        }
        return obj;
    };
    doc["x_star"] = vec(cert.x_star, true);
    doc["x_hat"] = vec(cert.x_hat, true);
    doc["y_star"] = vec(cert.y_star, false);
    doc["cost"] = rational_to_json(cert.cost_hat);
    doc["bridge_value"] = rational_to_json(cert.bridge_value);
    doc["packing_loads"] = vec(cert.packing_hat, false);
    return doc;
}

Json kbudget_result_to_json(const BudgetedInstance& instance, const KBudgetResult& result,
                            const Rational& eps, const Rational& nu) {
    Json doc;
    doc["feasible"] = result.feasible;
    doc["eps"] = rational_to_json(eps);
    doc["nu"] = rational_to_json(nu);
    doc["iterations"] = result.iterations;
    doc["skipped"] = result.skipped;
    if (!result.feasible) return doc;
    doc["basis"] = instance.matroid.ids_of(result.basis);
    Json lengths = Json::object();
    Json bounds = Json::object();
    for (std::size_t i = 0; i < instance.k(); ++i) {
        std::string key = "d" + std::to_string(i + 1);
        lengths[key] = rational_to_json(instance.length_of(i, result.basis));
        Rational cap = i == instance.objective_index ? instance.budgets[i]
                                                     : (1 + eps) * instance.budgets[i];
        bounds[key] = rational_to_json(cap);
    }
    doc["lengths"] = std::move(lengths);
    doc["verified_bounds"] = std::move(bounds);
    return doc;
}

Json oracle_report_to_json(const Instance& instance) {
    Json doc;
    auto trees = all_spanning_trees(instance.graph);
    doc["spanning_trees"] = trees.size();
    doc["matrix_tree_count"] = matrix_tree_count(instance.graph).get_str();
    OracleReport report = integral_opt(instance);
    doc["feasible_trees"] = report.feasible.size();
    if (report.optimum) {
        doc["integral_opt"] = rational_to_json(*report.optimum);
        Tree tree{report.witness};
        doc["witness"] = tree.ids(instance.graph);
    } else {
        doc["integral_opt"] = nullptr;
    }
    return doc;
}

Json matroid_oracle_report_to_json(const BudgetedInstance& instance) {
    Json doc;
    auto bases = all_bases(instance.matroid);
    doc["bases"] = bases.size();
    OracleReport report = kbudget_feasible_bases(instance);
    doc["feasible_bases"] = report.feasible.size();
    Json list = Json::array();
    for (const auto& basis : report.feasible) {
        ElemMask mask = 0;
        for (int e : basis) mask |= ElemMask(1) << e;
        list.push_back(instance.matroid.ids_of(mask));
    }
    doc["feasible"] = std::move(list);
    if (report.optimum) doc["objective_opt"] = rational_to_json(*report.optimum);
    return doc;
}

}  // namespace mcst
