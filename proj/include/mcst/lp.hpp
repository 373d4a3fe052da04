#ifndef MCST_LP_HPP
#define MCST_LP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcst/instance.hpp"
#include "mcst/rational.hpp"

namespace mcst {

enum class Sense { Le, Eq, Ge };

/// One linear row: sum of coeffs over declared variables, sense, rhs.
/// Tags are unique row identifiers; duals are keyed by them.
struct LinRow {
    std::string tag;
    std::map<int, Rational> coeffs;  // variable index -> coefficient
    Sense sense = Sense::Le;
    Rational rhs;
};

/// Minimization program over nonnegative variables.
class ConstraintSystem {
  public:
    ConstraintSystem() = default;

    int add_variable(const std::string& name);
    void add_row(LinRow row);
    void set_objective(int var, const Rational& coeff);

    int variable_count() const { return static_cast<int>(variables_.size()); }
    const std::vector<std::string>& variables() const { return variables_; }
    int variable_index(const std::string& name) const;
    const std::vector<LinRow>& rows() const { return rows_; }
    const std::vector<Rational>& objective() const { return objective_; }

  private:
    std::vector<std::string> variables_;
    std::vector<Rational> objective_;
    std::vector<LinRow> rows_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Rational value;
    std::vector<Rational> primal;        // by variable index
    std::map<std::string, Rational> dual;  // by row tag; absent rows have dual 0
    bool is_vertex = false;

    Rational dual_of(const std::string& tag) const {
        auto it = dual.find(tag);
        return it == dual.end() ? Rational(0) : it->second;
    }
};

struct SolverOptions {
    /// When positive, a pivot producing a numerator/denominator wider than
    /// this many bits aborts with NUMERIC_OVERFLOW. 0 means unbounded.
    std::size_t max_bits = 0;
};

/// Two-phase primal simplex with Bland's rule over exact rationals.
/// Deterministic: ties break by variable/row declaration order. On optimal
/// status the solution carries exact optimal duals; strong duality and
/// complementary slackness are re-checked internally before returning.
LPSolution solve(const ConstraintSystem& system, const SolverOptions& options = {});

/// Dual sign convention (minimization): <= rows have dual <= 0, >= rows have
/// dual >= 0, equality rows are unrestricted; c^T x* equals sum dual_r * rhs_r.
/// Exact feasibility / duality / slackness check; returns all violations.
std::vector<std::string> certificate_violations(const ConstraintSystem& system,
                                                const LPSolution& solution);

/// True when the rows tight at x, together with the tight nonnegativity
/// bounds, have full column rank — i.e. x is a vertex of the polyhedron.
bool tight_rows_full_rank(const std::vector<LinRow>& rows, const std::vector<Rational>& x);

// -- spanning-tree separation -------------------------------------------------

struct SeparationResult {
    bool all_satisfied = true;
    NodeMask set = 0;
    Rational violation;
};

/// Most violated x(E(S)) <= |S|-1 over all proper subsets; ties break by
/// smaller set size then lexicographic node order. Requires x >= 0.
/// Exhaustive over subsets (the 18-node envelope); a min-cut based
/// separator would replace only this function if larger graphs were needed.
SeparationResult separate_spanning_tree(const FractionalPoint& x, const Graph& graph);

/// Generic cutting-plane loop: solve, ask the separator for one violated row,
/// append, repeat. The separator must eventually return nullopt.
struct LazySolveResult {
    ConstraintSystem system;  // includes every generated row
    LPSolution solution;
};
LazySolveResult solve_with_lazy_rows(
    ConstraintSystem system,
    const std::function<std::optional<LinRow>(const std::vector<Rational>&)>& separator,
    const SolverOptions& options = {});

// -- the chain LP (P_lambda) --------------------------------------------------

inline std::string subset_row_tag(const Graph& graph, NodeMask set) {
    return "st:" + graph.set_key(set);
}
inline std::string degree_row_tag(std::size_t chain_index) {
    return "deg:S" + std::to_string(chain_index + 1);
}

struct ChainLpResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational opt;            // OPT(lambda); meaningful when optimal
    FractionalPoint point;   // x*
    LPSolution solution;
    ConstraintSystem system;
};

/// Solves (P_lambda): rows are the spanning-tree equality, inflated degree
/// rows, and all 2-element subset rows up front; the remaining subset rows
/// are generated lazily via separate_spanning_tree.
ChainLpResult solve_chain_lp(const Instance& instance, const Rational& lambda,
                             const SolverOptions& options = {});

}  // namespace mcst

#endif
