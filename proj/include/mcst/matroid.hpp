#ifndef MCST_MATROID_HPP
#define MCST_MATROID_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcst/instance.hpp"
#include "mcst/lp.hpp"
#include "mcst/rational.hpp"

namespace mcst {

using ElemMask = std::uint32_t;

/// Matroid given by ground set plus an independence predicate over element
/// masks. Graphic, uniform and partition realizations are provided; minors
/// (contraction/deletion) stay oracles over the surviving elements.
class MatroidOracle {
  public:
    MatroidOracle() = default;
    MatroidOracle(std::string kind, std::vector<std::string> ground,
                  std::function<bool(ElemMask)> independent);

    static MatroidOracle graphic(const Graph& graph);
    static MatroidOracle uniform(int n, int r);
    static MatroidOracle uniform(std::vector<std::string> ground, int r);
    static MatroidOracle partition(const std::vector<std::vector<std::string>>& blocks,
                                   const std::vector<int>& caps);

    const std::string& kind() const { return kind_; }
    int size() const { return static_cast<int>(ground_.size()); }
    const std::vector<std::string>& ground() const { return ground_; }
    int element_index(const std::string& id) const;

    bool independent(ElemMask subset) const { return independent_(subset); }

    /// Rank by greedy closure of the independence oracle.
    int rank(ElemMask subset) const;
    int rank_full() const { return rank(full_mask()); }
    bool is_basis(ElemMask subset) const;

    ElemMask full_mask() const { return (ElemMask(1) << size()) - 1; }
    ElemMask mask_of(const std::vector<std::string>& ids) const;
    std::vector<std::string> ids_of(ElemMask mask) const;

  private:
    std::string kind_;
    std::vector<std::string> ground_;
    std::function<bool(ElemMask)> independent_;
};

/// Minor with `contract` contracted (must be independent) and `del` deleted.
/// Ground set keeps the surviving elements in original order.
MatroidOracle matroid_minor(const MatroidOracle& matroid, ElemMask contract, ElemMask del);

struct BudgetedInstance {
    MatroidOracle matroid;
    std::vector<std::vector<Rational>> lengths;  // d_i over ground, i = 0..k-1
    std::vector<Rational> budgets;               // B_i >= 0
    std::size_t objective_index = 0;             // 0-based; spec's k-th budget

    std::size_t k() const { return lengths.size(); }
    Rational length_of(std::size_t i, ElemMask subset) const;
};

/// Validates shapes, nonnegativity, and objective_index range.
void validate_budgeted_instance(const BudgetedInstance& instance);

/// Delta_i = max_e d_i(e) over the packing (non-objective) budgets, in budget
/// order with the objective skipped.
std::vector<Rational> delta_vector(const BudgetedInstance& instance);

struct BasisLpResult {
    SolveStatus status;
    Rational value;
    FractionalPoint point;        // over ground elements
    std::vector<Rational> duals;  // y_i >= 0 per packing row (objective skipped)
};

/// Base-polytope LP: min d_k. x s.t. x(U) = rank(U), x(S) <= rank(S) lazily,
/// d_i. x <= B_i for i != k, x >= 0.
BasisLpResult basis_lp(const BudgetedInstance& instance);

struct BnRoundResult {
    ElemMask basis = 0;
    std::vector<Rational> deviation;  // |A_i (chi_B - x)| per packing row
};

/// Rounds x in the base polytope to a basis on the minimal face containing x,
/// minimizing the largest deviation |A_i(chi_B - x)| / Delta_i. Throws
/// CONTRACT_EXCEEDED when the best deviation exceeds nu*sqrt(k)*Delta_i.
BnRoundResult bn_round(const MatroidOracle& matroid, const FractionalPoint& x,
                       const std::vector<std::vector<Rational>>& packing_rows,
                       unsigned long k, const Rational& nu);

struct AdditiveSolveCertificate {
    Rational opt_zero;                 // OPT of the un-relaxed LP
    Rational opt_delta;
    std::vector<Rational> delta_used;  // nu * sqrt-upper(k) * Delta_i
    std::vector<Rational> basis_lengths;  // d_i(S) for all budgets i
};

struct AdditiveSolveResult {
    bool feasible = false;
    ElemMask basis = 0;
    AdditiveSolveCertificate certificate;
};

/// Budget-objective additive solve: one reduce_additive run with the bn_round
/// substitute. Infeasible when the LP relaxation is infeasible or its value
/// already exceeds the objective budget.
AdditiveSolveResult budgeted_additive_solve(const BudgetedInstance& instance, const Rational& nu);

/// Elements with d_i(e) > eps*B_i / (2*nu*sqrt(k)) for at least one budget;
/// sqrt(k) enters through its fixed rational upper bound, which can only
/// enlarge the heavy set.
ElemMask heavy_elements(const BudgetedInstance& instance, const Rational& eps, const Rational& nu);

struct KBudgetResult {
    bool feasible = false;
    ElemMask basis = 0;
    std::size_t iterations = 0;
    std::vector<std::string> skipped;  // logged reasons for skipped subsets
};

/// Partial-enumeration algorithm over heavy subsets; any returned basis is
/// re-verified against d_k(S) <= B_k and d_i(S) <= (1+eps) B_i.
KBudgetResult kbudget_solve(const BudgetedInstance& instance, const Rational& eps,
                            const Rational& nu, int jobs = 1);

}  // namespace mcst

#endif
