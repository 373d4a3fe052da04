#ifndef MCST_REDUCTION_HPP
#define MCST_REDUCTION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcst/instance.hpp"
#include "mcst/lp.hpp"
#include "mcst/rounding.hpp"

namespace mcst {

/// Polytope P in R^n_+ given by explicit rows plus an optional lazily
/// separated family. all_rows materializes the complete description (desk
/// scale) for minimal-face checks; linear_min_value, when present, is an
/// independent combinatorial route for min c.x over P (MST, matroid greedy).
struct LazyPolytope {
    std::vector<std::string> variables;
    std::vector<LinRow> eq_rows;
    std::vector<LinRow> initial_rows;
    std::function<std::optional<LinRow>(const std::vector<Rational>&)> separator;
    std::function<std::vector<LinRow>()> all_rows;
    std::function<Rational(const std::vector<Rational>&)> linear_min_value;
};

/// (Q^P): min c.x over extreme points of P subject to Ax <= b, with A, b, c
/// componentwise nonnegative.
struct PackingProblem {
    LazyPolytope polytope;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<std::string> row_tags;  // optional; defaults to pack:i

    std::size_t rows() const { return A.size(); }
    std::size_t vars() const { return polytope.variables.size(); }
    std::string tag_of(std::size_t i) const {
        return i < row_tags.size() ? row_tags[i] : "pack:" + std::to_string(i + 1);
    }
};

/// Sign checks plus boundedness of P (solves max sum x over P).
void validate_packing_problem(const PackingProblem& problem);

struct Scaling {
    enum class Kind { Lambda, Delta } kind = Kind::Lambda;
    Rational lambda = Rational(1);
    std::vector<Rational> delta;

    static Scaling multiplicative(const Rational& lambda);
    static Scaling additive(std::vector<Rational> delta);
};

struct RelaxationResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;  // optimal vertex
    std::vector<Rational> y;  // packing-row multipliers, >= 0
    LazySolveResult lazy;     // final system and solution
};

/// (R^P_lambda) or (W_Delta) over the lazily generated polytope rows.
RelaxationResult solve_relaxation(const PackingProblem& problem, const Scaling& scaling,
                                  const SolverOptions& options = {});

enum class FpraKind { Multiplicative, TwoSided, Additive };

/// Face-preserving rounding adapter: x -> extreme point of P, with the
/// declared guarantee (P2 beta / (alpha,beta) with P3 / additive).
struct Fpra {
    FpraKind kind = FpraKind::Multiplicative;
    Rational beta = Rational(1);
    Rational alpha = Rational(1);
    std::function<std::vector<Rational>(const std::vector<Rational>&)> round;
};

struct ReductionCertificate {
    Rational opt_base;     // OPT(1) / OPT(vec 0)
    Rational opt_relaxed;  // OPT(lambda) / OPT(Delta)
    std::vector<Rational> x_star;
    std::vector<Rational> y_star;
    std::vector<Rational> x_hat;
    Rational cost_hat;
    Rational bridge_value;              // (c^{y*})^T x_hat = (c^{y*})^T x*
    std::vector<Rational> packing_hat;  // A x_hat
};

struct ReductionResult {
    bool feasible = false;
    ReductionCertificate certificate;
};

/// Multiplicative driver: solve (R_lambda), round once, certify the cost bound
/// lambda/(lambda-1)*OPT(1), the beta*lambda*b packing bound, the minimal-
/// face bridge identity, and the subgradient bound.
ReductionResult reduce_weighted(const PackingProblem& problem, const Rational& lambda,
                                const Fpra& fpra, const SolverOptions& options = {});

/// Tight-row driver (multiplicative machinery at lambda = alpha): certifies c.x_hat <= OPT(1) and
/// Ax_hat <= alpha*beta*b, with P3 checked pointwise on rows tight at x*.
ReductionResult reduce_two_sided(const PackingProblem& problem, const Rational& alpha,
                                 const Rational& beta, const Fpra& fpra,
                                 const SolverOptions& options = {});

/// Additive driver: solve (W_Delta), round once, verify the two Lagrangian
/// identities, |A(x_tilde - x*)| <= Delta, c.x_tilde <= OPT(0), and
/// Ax_tilde <= b + 2*Delta.
ReductionResult reduce_additive(const PackingProblem& problem,
                                const std::vector<Rational>& delta, const Fpra& fpra,
                                const SolverOptions& options = {});

/// Rows of the complete polytope description that are tight at x but not at
/// x_hat (plus support violations); empty iff x_hat sits on the minimal face.
std::vector<std::string> minimal_face_violations(const PackingProblem& problem,
                                                 const std::vector<Rational>& x,
                                                 const std::vector<Rational>& x_hat);

// -- casts and reference adapters ---------------------------------------------

/// MCST as (Q^P): P = spanning-tree polytope (lazy subset rows), packing rows
/// = chain degree rows (tagged deg:Si), c = edge costs.
PackingProblem mcst_as_packing(const Instance& instance);

/// The pipeline rounder as an adapter: laminar decomposition, rainbow-free
/// conversion, face-preserving rounding; declares P2 with beta = 9.
Fpra mcst_fpra(const Instance& instance, const RoundingOptions& options = {});

/// Test-grade rounder for small explicit polytopes: enumerates the vertices
/// on the minimal face of x and picks the best for the declared guarantee
/// (P3 candidates first for TwoSided). Deterministic.
Fpra brute_force_fpra(const PackingProblem& problem, FpraKind kind, const Rational& alpha,
                      const std::vector<Rational>& delta = {});

/// All vertices of the explicit polytope description (basic feasible points
/// of all_rows() plus nonnegativity), deduplicated, lexicographic order.
std::vector<std::vector<Rational>> enumerate_polytope_vertices(const PackingProblem& problem);

}  // namespace mcst

#endif
