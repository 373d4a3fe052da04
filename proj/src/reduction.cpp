#include "mcst/reduction.hpp"

#include <algorithm>
#include <bit>

#include "mcst/error.hpp"
#include "mcst/lagrangian.hpp"

namespace mcst {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
    return total;
}

Rational row_value(const LinRow& row, const std::vector<Rational>& x) {
    Rational lhs = 0;
    for (const auto& [var, coeff] : row.coeffs) lhs += coeff * x[static_cast<std::size_t>(var)];
    return lhs;
}

bool row_satisfied(const LinRow& row, const std::vector<Rational>& x) {
    Rational lhs = row_value(row, x);
    switch (row.sense) {
        case Sense::Le: return lhs <= row.rhs;
        case Sense::Ge: return lhs >= row.rhs;
        case Sense::Eq: return lhs == row.rhs;
    }
    return false;
}

ConstraintSystem base_system(const PackingProblem& problem) {
    ConstraintSystem system;
    for (const auto& name : problem.polytope.variables) system.add_variable(name);
    return system;
}

std::vector<LinRow> packing_rows(const PackingProblem& problem, const Scaling& scaling) {
    std::vector<LinRow> rows;
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        LinRow row;
        row.tag = problem.tag_of(i);
        row.sense = Sense::Le;
        row.rhs = scaling.kind == Scaling::Kind::Lambda
                      ? Rational(scaling.lambda * problem.b[i])
                      : Rational(problem.b[i] + scaling.delta[i]);
        for (std::size_t j = 0; j < problem.vars(); ++j)
            if (problem.A[i][j] != 0) row.coeffs[static_cast<int>(j)] = problem.A[i][j];
        rows.push_back(std::move(row));
    }
    return rows;
}

/// min costs.x over the bare polytope (no packing rows); used for the
/// Lagrangian inner problem when no combinatorial minimizer is supplied.
Rational polytope_min(const PackingProblem& problem, const std::vector<Rational>& costs,
                      const SolverOptions& options) {
    if (problem.polytope.linear_min_value) return problem.polytope.linear_min_value(costs);
    ConstraintSystem system = base_system(problem);
    for (std::size_t j = 0; j < costs.size(); ++j)
        system.set_objective(static_cast<int>(j), costs[j]);
    for (const LinRow& row : problem.polytope.eq_rows) system.add_row(row);
    for (const LinRow& row : problem.polytope.initial_rows) system.add_row(row);
    LazySolveResult lazy =
        solve_with_lazy_rows(std::move(system), problem.polytope.separator, options);
    if (lazy.solution.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant, "polytope minimization not optimal");
    return lazy.solution.value;
}

}  // namespace

Scaling Scaling::multiplicative(const Rational& lambda) {
    Scaling s;
    s.kind = Kind::Lambda;
    s.lambda = lambda;
    return s;
}

Scaling Scaling::additive(std::vector<Rational> delta) {
    Scaling s;
    s.kind = Kind::Delta;
    s.delta = std::move(delta);
    return s;
}

void validate_packing_problem(const PackingProblem& problem) {
    std::vector<std::string> bad;
    if (problem.b.size() != problem.rows()) bad.push_back("b size differs from A rows");
    if (problem.c.size() != problem.vars()) bad.push_back("c size differs from variables");
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        if (problem.A[i].size() != problem.vars()) bad.push_back("A row width mismatch");
        for (const auto& a : problem.A[i])
            if (a < 0) bad.push_back("negative packing coefficient");
        if (problem.b[i] < 0) bad.push_back("negative packing rhs");
    }
    for (const auto& c : problem.c)
        if (c < 0) bad.push_back("negative objective coefficient");
    if (!bad.empty()) throw Error(ErrorCode::ValidationFailed, bad);

    // P must be bounded: maximize sum x over P (no packing rows)
    ConstraintSystem system = base_system(problem);
    for (std::size_t j = 0; j < problem.vars(); ++j)
        system.set_objective(static_cast<int>(j), Rational(-1));
    for (const LinRow& row : problem.polytope.eq_rows) system.add_row(row);
    for (const LinRow& row : problem.polytope.initial_rows) system.add_row(row);
    LazySolveResult lazy = solve_with_lazy_rows(std::move(system), problem.polytope.separator, {});
    if (lazy.solution.status == SolveStatus::Unbounded)
        throw Error(ErrorCode::ValidationFailed, "polytope is unbounded");
}

RelaxationResult solve_relaxation(const PackingProblem& problem, const Scaling& scaling,
                                  const SolverOptions& options) {
    if (scaling.kind == Scaling::Kind::Delta && scaling.delta.size() != problem.rows())
        throw Error(ErrorCode::ValidationFailed, "delta size differs from packing rows");

    ConstraintSystem system = base_system(problem);
    for (std::size_t j = 0; j < problem.vars(); ++j)
        system.set_objective(static_cast<int>(j), problem.c[j]);
    for (const LinRow& row : problem.polytope.eq_rows) system.add_row(row);
    for (LinRow& row : packing_rows(problem, scaling)) system.add_row(std::move(row));
    for (const LinRow& row : problem.polytope.initial_rows) system.add_row(row);

    RelaxationResult result;
    result.lazy = solve_with_lazy_rows(std::move(system), problem.polytope.separator, options);
    result.status = result.lazy.solution.status;
    if (result.status != SolveStatus::Optimal) return result;
    result.value = result.lazy.solution.value;
    result.x = result.lazy.solution.primal;
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        Rational y = -result.lazy.solution.dual_of(problem.tag_of(i));
        if (y < 0)
            throw Error(ErrorCode::InternalInvariant, "packing multiplier with wrong sign");
        result.y.push_back(y);
    }
    return result;
}

std::vector<std::string> minimal_face_violations(const PackingProblem& problem,
                                                 const std::vector<Rational>& x,
                                                 const std::vector<Rational>& x_hat) {
    if (!problem.polytope.all_rows)
        throw Error(ErrorCode::InternalInvariant,
                    "face check requires the full polytope description");
    std::vector<std::string> out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x_hat[j] < 0) out.push_back("negative coordinate " + problem.polytope.variables[j]);
        if (x[j] == 0 && x_hat[j] != 0)
            out.push_back("support grew at " + problem.polytope.variables[j]);
    }
    for (const LinRow& row : problem.polytope.all_rows()) {
        if (!row_satisfied(row, x_hat)) out.push_back("infeasible at row " + row.tag);
        if (row_value(row, x) == row.rhs && row_value(row, x_hat) != row.rhs)
            out.push_back("tight row lost: " + row.tag);
    }
    return out;
}

namespace {

struct RoundOutcome {
    std::vector<Rational> x_hat;
    ReductionCertificate cert;
};

RoundOutcome round_and_bridge(const PackingProblem& problem, const RelaxationResult& base,
                              const RelaxationResult& relaxed, const Fpra& fpra) {
    RoundOutcome out;
    out.x_hat = fpra.round(relaxed.x);
    if (out.x_hat.size() != problem.vars())
        throw Error(ErrorCode::InternalInvariant, "rounded point has wrong dimension");

    auto face = minimal_face_violations(problem, relaxed.x, out.x_hat);
    if (!face.empty()) throw Error(ErrorCode::P1Violation, face);
    std::vector<LinRow> rows = problem.polytope.all_rows();
    if (!tight_rows_full_rank(rows, out.x_hat))
        throw Error(ErrorCode::P1Violation, "rounded point is not an extreme point of P");

    ReductionCertificate& cert = out.cert;
    cert.opt_base = base.value;
    cert.opt_relaxed = relaxed.value;
    cert.x_star = relaxed.x;
    cert.y_star = relaxed.y;
    cert.x_hat = out.x_hat;
    cert.cost_hat = dot(problem.c, out.x_hat);

    // perturbed costs c^{y*} = c + A^T y*
    std::vector<Rational> perturbed = problem.c;
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        if (relaxed.y[i] == 0) continue;
        for (std::size_t j = 0; j < problem.vars(); ++j)
            perturbed[j] += relaxed.y[i] * problem.A[i][j];
    }
    Rational bridge_hat = dot(perturbed, out.x_hat);
    Rational bridge_star = dot(perturbed, relaxed.x);
    if (bridge_hat != bridge_star)
        throw Error(ErrorCode::CertFailed,
                    "minimal-face identity fails: " + rational_to_string(bridge_hat) +
                        " != " + rational_to_string(bridge_star));
    // (c^{y*})^T x* = c^T x* + (y*)^T A x*
    Rational ax_part = 0;
    for (std::size_t i = 0; i < problem.rows(); ++i)
        ax_part += relaxed.y[i] * dot(problem.A[i], relaxed.x);
    if (bridge_star != dot(problem.c, relaxed.x) + ax_part)
        throw Error(ErrorCode::CertFailed, "perturbed-cost expansion fails");
    cert.bridge_value = bridge_hat;

    for (std::size_t i = 0; i < problem.rows(); ++i)
        cert.packing_hat.push_back(dot(problem.A[i], out.x_hat));
    return out;
}

void check_subgradient_product(const RelaxationResult& base, const RelaxationResult& relaxed,
                               const Rational& factor, const PackingProblem& problem) {
    // (lambda - 1) * (y*)^T b <= OPT(1) - OPT(lambda), in product form
    Rational lhs = factor * dot(relaxed.y, problem.b);
    Rational rhs = base.value - relaxed.value;
    if (lhs > rhs)
        throw Error(ErrorCode::CertFailed,
                    "subgradient bound fails: " + rational_to_string(lhs) + " > " +
                        rational_to_string(rhs));
}

}  // namespace

ReductionResult reduce_weighted(const PackingProblem& problem, const Rational& lambda,
                                const Fpra& fpra, const SolverOptions& options) {
    validate_packing_problem(problem);
    if (lambda <= 1)
        throw Error(ErrorCode::ValidationFailed, "reduce_weighted requires lambda > 1");

    ReductionResult result;
    RelaxationResult base = solve_relaxation(problem, Scaling::multiplicative(Rational(1)), options);
    if (base.status != SolveStatus::Optimal) return result;
    RelaxationResult relaxed = solve_relaxation(problem, Scaling::multiplicative(lambda), options);
    if (relaxed.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant, "inflated relaxation lost feasibility");

    RoundOutcome out = round_and_bridge(problem, base, relaxed, fpra);
    check_subgradient_product(base, relaxed, lambda - 1, problem);

    // P2 against the fractional loads, then the certified bounds
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        Rational load = dot(problem.A[i], relaxed.x);
        if (out.cert.packing_hat[i] > fpra.beta * load)
            throw Error(ErrorCode::CertFailed, "P2 violated on row " + problem.tag_of(i));
        if (out.cert.packing_hat[i] > fpra.beta * lambda * problem.b[i])
            throw Error(ErrorCode::CertFailed,
                        "packing bound beta*lambda*b violated on row " + problem.tag_of(i));
    }
    if ((lambda - 1) * out.cert.cost_hat > lambda * base.value)
        throw Error(ErrorCode::CertFailed, "cost bound lambda/(lambda-1)*OPT(1) violated");

    result.feasible = true;
    result.certificate = std::move(out.cert);
    return result;
}

ReductionResult reduce_two_sided(const PackingProblem& problem, const Rational& alpha,
                                 const Rational& beta, const Fpra& fpra,
                                 const SolverOptions& options) {
    validate_packing_problem(problem);
    if (alpha < 1)
        throw Error(ErrorCode::ValidationFailed, "reduce_two_sided requires alpha >= 1");

    ReductionResult result;
    RelaxationResult base = solve_relaxation(problem, Scaling::multiplicative(Rational(1)), options);
    if (base.status != SolveStatus::Optimal) return result;
    RelaxationResult relaxed =
        alpha == 1 ? base : solve_relaxation(problem, Scaling::multiplicative(alpha), options);
    if (relaxed.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant, "inflated relaxation lost feasibility");

    RoundOutcome out = round_and_bridge(problem, base, relaxed, fpra);
    check_subgradient_product(base, relaxed, alpha - 1, problem);

    // P3 pointwise on the rows tight at x*
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        Rational load = dot(problem.A[i], relaxed.x);
        if (load != alpha * problem.b[i]) continue;
        if (alpha * out.cert.packing_hat[i] < load)
            throw Error(ErrorCode::P3Violation, "row " + problem.tag_of(i));
    }
    for (std::size_t i = 0; i < problem.rows(); ++i)
        if (out.cert.packing_hat[i] > alpha * beta * problem.b[i])
            throw Error(ErrorCode::CertFailed,
                        "packing bound alpha*beta*b violated on row " + problem.tag_of(i));
    if (out.cert.cost_hat > base.value)
        throw Error(ErrorCode::CertFailed, "cost exceeds OPT(1)");

    result.feasible = true;
    result.certificate = std::move(out.cert);
    return result;
}

ReductionResult reduce_additive(const PackingProblem& problem,
                                const std::vector<Rational>& delta, const Fpra& fpra,
                                const SolverOptions& options) {
    validate_packing_problem(problem);
    if (delta.size() != problem.rows())
        throw Error(ErrorCode::ValidationFailed, "delta size differs from packing rows");
    for (const auto& d : delta)
        if (d < 0) throw Error(ErrorCode::ValidationFailed, "delta must be nonnegative");

    ReductionResult result;
    std::vector<Rational> zero(problem.rows(), Rational(0));
    RelaxationResult base = solve_relaxation(problem, Scaling::additive(zero), options);
    if (base.status != SolveStatus::Optimal) return result;
    RelaxationResult relaxed = solve_relaxation(problem, Scaling::additive(delta), options);
    if (relaxed.status != SolveStatus::Optimal)
        throw Error(ErrorCode::InternalInvariant, "relaxed program lost feasibility");

    RoundOutcome out = round_and_bridge(problem, base, relaxed, fpra);

    // two-sided additive deviation against the fractional loads
    for (std::size_t i = 0; i < problem.rows(); ++i) {
        Rational load = dot(problem.A[i], relaxed.x);
        Rational dev = out.cert.packing_hat[i] - load;
        if (dev < 0) dev = -dev;
        if (dev > delta[i])
            throw Error(ErrorCode::AdditiveViolation,
                        "row " + problem.tag_of(i) + " deviates by " + rational_to_string(dev));
    }

    // phi_Delta(y*) = Phi_{Delta,y*}(x*) = OPT(Delta), with the inner minimum
    // computed by the independent route
    std::vector<Rational> perturbed = problem.c;
    for (std::size_t i = 0; i < problem.rows(); ++i)
        for (std::size_t j = 0; j < problem.vars(); ++j)
            perturbed[j] += relaxed.y[i] * problem.A[i][j];
    Rational dualized = 0;
    for (std::size_t i = 0; i < problem.rows(); ++i)
        dualized += relaxed.y[i] * (problem.b[i] + delta[i]);
    Rational phi = polytope_min(problem, perturbed, options) - dualized;
    Rational big_phi = dot(perturbed, relaxed.x) - dualized;
    if (phi != big_phi || big_phi != relaxed.value)
        throw Error(ErrorCode::LemmaViolation,
                    "phi=" + rational_to_string(phi) + " Phi=" + rational_to_string(big_phi) +
                        " OPT(Delta)=" + rational_to_string(relaxed.value));
    // (y*)^T Delta <= OPT(0) - OPT(Delta)
    if (dot(relaxed.y, delta) > base.value - relaxed.value)
        throw Error(ErrorCode::LemmaViolation, "additive subgradient bound fails");

    for (std::size_t i = 0; i < problem.rows(); ++i)
        if (out.cert.packing_hat[i] > problem.b[i] + 2 * delta[i])
            throw Error(ErrorCode::CertFailed,
                        "packing bound b + 2*Delta violated on row " + problem.tag_of(i));
    if (out.cert.cost_hat > base.value)
        throw Error(ErrorCode::CertFailed, "cost exceeds OPT(0)");

    result.feasible = true;
    result.certificate = std::move(out.cert);
    return result;
}

PackingProblem mcst_as_packing(const Instance& instance) {
    const Graph& graph = instance.graph;
    const Chain& chain = instance.chain;
    PackingProblem problem;
    for (const Edge& e : graph.edges()) {
        problem.polytope.variables.push_back(e.id);
        problem.c.push_back(e.cost);
    }

    LinRow span;
    span.tag = "span";
    span.sense = Sense::Eq;
    span.rhs = graph.node_count() - 1;
    for (int e = 0; e < graph.edge_count(); ++e) span.coeffs[e] = 1;
    problem.polytope.eq_rows.push_back(std::move(span));

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
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_inside(e, pair)) {
                row.coeffs[e] = 1;
                any = true;
            }
        if (any) problem.polytope.initial_rows.push_back(std::move(row));
    }

    problem.polytope.separator = [graph](const std::vector<Rational>& primal)
        -> std::optional<LinRow> {
        SeparationResult sep = separate_spanning_tree(FractionalPoint{primal}, graph);
        if (sep.all_satisfied) return std::nullopt;
        LinRow row;
        row.tag = subset_row_tag(graph, sep.set);
        row.sense = Sense::Le;
        row.rhs = std::popcount(sep.set) - 1;
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_inside(e, sep.set)) row.coeffs[e] = 1;
        return row;
    };

    problem.polytope.all_rows = [graph]() {
        std::vector<LinRow> rows;
        LinRow span_row;
        span_row.tag = "span";
        span_row.sense = Sense::Eq;
        span_row.rhs = graph.node_count() - 1;
        for (int e = 0; e < graph.edge_count(); ++e) span_row.coeffs[e] = 1;
        rows.push_back(std::move(span_row));
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
            if (any) rows.push_back(std::move(row));
        }
        return rows;
    };

    problem.polytope.linear_min_value = [graph](const std::vector<Rational>& costs) {
        return minimum_spanning_tree(graph, costs).value;
    };

    for (std::size_t i = 0; i < chain.size(); ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(graph.edge_count()), Rational(0));
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_crosses(e, chain.set(i).mask)) row[static_cast<std::size_t>(e)] = 1;
        problem.A.push_back(std::move(row));
        problem.b.push_back(Rational(chain.set(i).bound));
        problem.row_tags.push_back(degree_row_tag(i));
    }
    return problem;
}

Fpra mcst_fpra(const Instance& instance, const RoundingOptions& options) {
    Fpra fpra;
    fpra.kind = FpraKind::Multiplicative;
    fpra.beta = 9;
    fpra.round = [instance, options](const std::vector<Rational>& x) {
        FractionalPoint point{x};
        LaminarDecomposition decomp = laminar_decomposition(point, instance.graph);
        RainbowFreeResult rf = make_rainbow_free(point, decomp, instance);
        Tree tree = face_preserving_round(rf.x_prime, rf.decomp_prime, instance.graph,
                                          instance.chain, options);
        std::vector<Rational> hat(x.size(), Rational(0));
        for (int e : tree.edges) hat[static_cast<std::size_t>(e)] = 1;
        return hat;
    };
    return fpra;
}

std::vector<std::vector<Rational>> enumerate_polytope_vertices(const PackingProblem& problem) {
    if (!problem.polytope.all_rows)
        throw Error(ErrorCode::InternalInvariant, "vertex enumeration needs the full description");
    std::vector<LinRow> rows = problem.polytope.all_rows();
    std::size_t n = problem.vars();
    std::size_t t = rows.size() + n;
    if (n > 12 || t > 64)
        throw Error(ErrorCode::TooLarge, "vertex enumeration guard exceeded");

    std::vector<std::vector<Rational>> vertices;
    std::vector<std::size_t> combo;
    // candidate constraint i < rows.size(): row i as equality; otherwise
    // the bound x_{i - rows.size()} = 0
    auto gather = [&](const std::vector<std::size_t>& picks) {
        std::vector<std::vector<Rational>> mat;
        std::vector<Rational> rhs;
        for (std::size_t p : picks) {
            std::vector<Rational> line(n, Rational(0));
            if (p < rows.size()) {
                for (const auto& [var, coeff] : rows[p].coeffs)
                    line[static_cast<std::size_t>(var)] = coeff;
                rhs.push_back(rows[p].rhs);
            } else {
                line[p - rows.size()] = 1;
                rhs.push_back(Rational(0));
            }
            mat.push_back(std::move(line));
        }
        // solve the square system by elimination; singular -> skip
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && mat[pivot][col] == 0) ++pivot;
            if (pivot == n) return;
            std::swap(mat[pivot], mat[col]);
            std::swap(rhs[pivot], rhs[col]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || mat[r][col] == 0) continue;
                Rational f = mat[r][col] / mat[col][col];
                for (std::size_t c2 = col; c2 < n; ++c2) mat[r][c2] -= f * mat[col][c2];
                rhs[r] -= f * rhs[col];
            }
        }
        std::vector<Rational> x(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = rhs[j] / mat[j][j];
            if (x[j] < 0) return;
        }
        for (const LinRow& row : rows)
            if (!row_satisfied(row, x)) return;
        vertices.push_back(std::move(x));
    };
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t need) {
        if (need == 0) {
            gather(combo);
            return;
        }
        for (std::size_t i = from; i + need <= t; ++i) {
            combo.push_back(i);
            pick(i + 1, need - 1);
            combo.pop_back();
        }
    };
    pick(0, n);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Fpra brute_force_fpra(const PackingProblem& problem, FpraKind kind, const Rational& alpha,
                      const std::vector<Rational>& delta) {
    auto vertices = enumerate_polytope_vertices(problem);
    auto rows = problem.polytope.all_rows();
    auto A = problem.A;
    auto b = problem.b;

    Fpra fpra;
    fpra.kind = kind;
    fpra.alpha = alpha;
    fpra.beta = 1;
    fpra.round = [=](const std::vector<Rational>& x) {
        std::vector<std::vector<Rational>> face;
        for (const auto& v : vertices) {
            bool ok = true;
            for (std::size_t j = 0; j < x.size() && ok; ++j)
                if (x[j] == 0 && v[j] != 0) ok = false;
            for (const LinRow& row : rows) {
                if (!ok) break;
                if (row_value(row, x) == row.rhs && row_value(row, v) != row.rhs) ok = false;
            }
            if (ok) face.push_back(v);
        }
        if (face.empty())
            throw Error(ErrorCode::InternalInvariant, "minimal face carries no vertex");

        auto max_ratio = [&](const std::vector<Rational>& v) {
            Rational worst = 0;
            for (std::size_t i = 0; i < A.size(); ++i) {
                Rational load = dot(A[i], x);
                if (load == 0) continue;  // supp(v) <= supp(x) forces A_i v = 0
                Rational ratio = dot(A[i], v) / load;
                if (ratio > worst) worst = ratio;
            }
            return worst;
        };
        auto max_deviation = [&](const std::vector<Rational>& v) -> std::optional<Rational> {
            Rational worst = 0;
            for (std::size_t i = 0; i < A.size(); ++i) {
                Rational dev = dot(A[i], v) - dot(A[i], x);
                if (dev < 0) dev = -dev;
                if (i < delta.size() && delta[i] > 0) {
                    Rational norm = dev / delta[i];
                    if (norm > worst) worst = norm;
                } else if (dev > 0) {
                    return std::nullopt;  // zero-slack row must be preserved
                }
            }
            return worst;
        };

        std::vector<std::vector<Rational>> pool = face;
        if (kind == FpraKind::TwoSided) {
            std::vector<std::vector<Rational>> p3;
            for (const auto& v : face) {
                bool ok = true;
                for (std::size_t i = 0; i < A.size() && ok; ++i) {
                    if (dot(A[i], x) != alpha * b[i]) continue;
                    if (alpha * dot(A[i], v) < dot(A[i], x)) ok = false;
                }
                if (ok) p3.push_back(v);
            }
            if (!p3.empty()) pool = std::move(p3);
        }

        const std::vector<Rational>* best = nullptr;
        Rational best_score;
        bool best_valid = false;
        for (const auto& v : pool) {
            Rational score;
            bool valid = true;
            if (kind == FpraKind::Additive) {
                auto dev = max_deviation(v);
                if (!dev) {
                    valid = false;
                    score = 0;
                } else {
                    score = *dev;
                }
            } else {
                score = max_ratio(v);
            }
            if (!valid && best_valid) continue;
            bool better = best == nullptr || (valid && !best_valid) ||
                          (valid == best_valid && score < best_score) ||
                          (valid == best_valid && score == best_score && v < *best);
            if (better) {
                best = &v;
                best_score = score;
                best_valid = valid;
            }
        }
        return *best;
    };
    return fpra;
}

}  // namespace mcst
