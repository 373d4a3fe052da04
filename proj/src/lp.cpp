#include "mcst/lp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "mcst/error.hpp"

namespace mcst {

int ConstraintSystem::add_variable(const std::string& name) {
    variables_.push_back(name);
    objective_.push_back(Rational(0));
    return static_cast<int>(variables_.size()) - 1;
}

void ConstraintSystem::add_row(LinRow row) {
    for (const auto& [var, coeff] : row.coeffs) {
        (void)coeff;
        if (var < 0 || var >= variable_count())
            throw Error(ErrorCode::InternalInvariant,
                        "row " + row.tag + " references undeclared variable");
    }
    for (const auto& existing : rows_)
        if (existing.tag == row.tag)
            throw Error(ErrorCode::InternalInvariant, "duplicate row tag " + row.tag);
    rows_.push_back(std::move(row));
}

void ConstraintSystem::set_objective(int var, const Rational& coeff) {
    objective_[static_cast<std::size_t>(var)] = coeff;
}

int ConstraintSystem::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

enum class ColKind { Structural, Slack, Surplus, Artificial };

/// Dense two-phase tableau. Rows are normalized to rhs >= 0 (flipped rows
/// remember their sign for dual recovery). Every row keeps a marker column
/// (its slack, or its artificial for >=/= rows) whose final reduced cost
/// yields the row's dual value.
class Simplex {
  public:
    Simplex(const ConstraintSystem& system, const SolverOptions& options)
        : system_(system), options_(options) {}

    LPSolution run() {
        build();
        if (has_artificials_ && !phase_one()) {
            LPSolution sol;
            sol.status = SolveStatus::Infeasible;
            return sol;
        }
        return phase_two();
    }

  private:
    const ConstraintSystem& system_;
    const SolverOptions& options_;

    int n_ = 0;  // structural count
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> rhs_;
    std::vector<int> basis_;       // per row: basic column
    std::vector<bool> row_alive_;
    std::vector<int> flip_;        // +1 / -1 per original row
    std::vector<int> marker_;      // per row: dual marker column
    std::vector<ColKind> kind_;
    std::vector<bool> dead_col_;   // artificials that left the basis
    std::vector<Rational> objrow_;
    Rational objval_;
    bool has_artificials_ = false;
    bool in_phase_one_ = false;

    int cols() const { return static_cast<int>(kind_.size()); }

    void build() {
        n_ = system_.variable_count();
        const auto& rows = system_.rows();
        int m = static_cast<int>(rows.size());

        int extra = 0;
        for (const auto& row : rows) {
            Sense sense = row.sense;
            bool flip = row.rhs < 0;
            if (flip && sense != Sense::Eq) sense = (sense == Sense::Le) ? Sense::Ge : Sense::Le;
            extra += (sense == Sense::Le) ? 1 : (sense == Sense::Ge ? 2 : 1);
        }
        kind_.assign(static_cast<std::size_t>(n_), ColKind::Structural);
        kind_.reserve(static_cast<std::size_t>(n_ + extra));
        dead_col_.assign(static_cast<std::size_t>(n_), false);

        tab_.assign(static_cast<std::size_t>(m), {});
        rhs_.assign(static_cast<std::size_t>(m), Rational(0));
        basis_.assign(static_cast<std::size_t>(m), -1);
        row_alive_.assign(static_cast<std::size_t>(m), true);
        flip_.assign(static_cast<std::size_t>(m), 1);
        marker_.assign(static_cast<std::size_t>(m), -1);

        int total = n_ + extra;
        for (int r = 0; r < m; ++r) {
            const LinRow& row = rows[static_cast<std::size_t>(r)];
            auto& line = tab_[static_cast<std::size_t>(r)];
            line.assign(static_cast<std::size_t>(total), Rational(0));
            bool flip = row.rhs < 0;
            flip_[static_cast<std::size_t>(r)] = flip ? -1 : 1;
            for (const auto& [var, coeff] : row.coeffs)
                line[static_cast<std::size_t>(var)] = flip ? Rational(-coeff) : coeff;
            rhs_[static_cast<std::size_t>(r)] = flip ? Rational(-row.rhs) : row.rhs;
            Sense sense = row.sense;
            if (flip && sense != Sense::Eq) sense = (sense == Sense::Le) ? Sense::Ge : Sense::Le;

            if (sense == Sense::Le) {
                int slack = add_column(ColKind::Slack);
                line.resize(static_cast<std::size_t>(total), Rational(0));
                line[static_cast<std::size_t>(slack)] = 1;
                basis_[static_cast<std::size_t>(r)] = slack;
                marker_[static_cast<std::size_t>(r)] = slack;
            } else if (sense == Sense::Ge) {
                int surplus = add_column(ColKind::Surplus);
                int art = add_column(ColKind::Artificial);
                line[static_cast<std::size_t>(surplus)] = -1;
                line[static_cast<std::size_t>(art)] = 1;
                basis_[static_cast<std::size_t>(r)] = art;
                marker_[static_cast<std::size_t>(r)] = art;
                has_artificials_ = true;
            } else {
                int art = add_column(ColKind::Artificial);
                line[static_cast<std::size_t>(art)] = 1;
                basis_[static_cast<std::size_t>(r)] = art;
                marker_[static_cast<std::size_t>(r)] = art;
                has_artificials_ = true;
            }
        }
    }

    int add_column(ColKind kind) {
        kind_.push_back(kind);
        dead_col_.push_back(false);
        return cols() - 1;
    }

    bool enterable(int j) const {
        if (dead_col_[static_cast<std::size_t>(j)]) return false;
        if (!in_phase_one_ && kind_[static_cast<std::size_t>(j)] == ColKind::Artificial)
            return false;
        return true;
    }

    void set_costs(const std::vector<Rational>& costs) {
        objrow_ = costs;
        objval_ = 0;
        int m = static_cast<int>(tab_.size());
        for (int r = 0; r < m; ++r) {
            if (!row_alive_[static_cast<std::size_t>(r)]) continue;
            const Rational& cb = costs[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
            if (cb == 0) continue;
            const auto& line = tab_[static_cast<std::size_t>(r)];
            for (int j = 0; j < cols(); ++j)
                if (line[static_cast<std::size_t>(j)] != 0)
                    objrow_[static_cast<std::size_t>(j)] -= cb * line[static_cast<std::size_t>(j)];
            objval_ += cb * rhs_[static_cast<std::size_t>(r)];
        }
        if (options_.max_bits != 0)
            for (const auto& value : objrow_) check_wide(value);
    }

    void pivot(int r, int s) {
        auto& prow = tab_[static_cast<std::size_t>(r)];
        Rational piv = prow[static_cast<std::size_t>(s)];
        if (piv != 1) {
            for (auto& cell : prow)
                if (cell != 0) cell /= piv;
            prow[static_cast<std::size_t>(s)] = 1;
            rhs_[static_cast<std::size_t>(r)] /= piv;
        }
        int m = static_cast<int>(tab_.size());
        for (int i = 0; i < m; ++i) {
            if (i == r || !row_alive_[static_cast<std::size_t>(i)]) continue;
            auto& line = tab_[static_cast<std::size_t>(i)];
            Rational f = line[static_cast<std::size_t>(s)];
            if (f == 0) continue;
            for (int j = 0; j < cols(); ++j)
                if (prow[static_cast<std::size_t>(j)] != 0)
                    line[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
            line[static_cast<std::size_t>(s)] = 0;
            rhs_[static_cast<std::size_t>(i)] -= f * rhs_[static_cast<std::size_t>(r)];
        }
        Rational g = objrow_[static_cast<std::size_t>(s)];
        if (g != 0) {
            for (int j = 0; j < cols(); ++j)
                if (prow[static_cast<std::size_t>(j)] != 0)
                    objrow_[static_cast<std::size_t>(j)] -= g * prow[static_cast<std::size_t>(j)];
            objrow_[static_cast<std::size_t>(s)] = 0;
            objval_ += g * rhs_[static_cast<std::size_t>(r)];
        }
        int leaving = basis_[static_cast<std::size_t>(r)];
        if (kind_[static_cast<std::size_t>(leaving)] == ColKind::Artificial)
            dead_col_[static_cast<std::size_t>(leaving)] = true;
        basis_[static_cast<std::size_t>(r)] = s;
        check_magnitudes(r);
    }

    void check_magnitudes(int r) {
        if (options_.max_bits == 0) return;
        for (const auto& cell : tab_[static_cast<std::size_t>(r)]) check_wide(cell);
        for (const auto& value : rhs_) check_wide(value);
        for (const auto& value : objrow_) check_wide(value);
    }

    void check_wide(const Rational& value) const {
        if (mpz_sizeinbase(value.get_num().get_mpz_t(), 2) > options_.max_bits ||
            mpz_sizeinbase(value.get_den().get_mpz_t(), 2) > options_.max_bits)
            throw Error(ErrorCode::NumericOverflow, "rational magnitude limit exceeded");
    }

    /// Bland: entering is the first enterable column with negative reduced
    /// cost; leaving is the min-ratio row, ties by smallest basic variable.
    /// Returns false when no entering column exists (current basis optimal).
    bool simplex_loop() {
        int m = static_cast<int>(tab_.size());
        for (;;) {
            int s = -1;
            for (int j = 0; j < cols(); ++j) {
                if (objrow_[static_cast<std::size_t>(j)] < 0 && enterable(j)) {
                    s = j;
                    break;
                }
            }
            if (s < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (!row_alive_[static_cast<std::size_t>(i)]) continue;
                const Rational& a = tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
                if (a <= 0) continue;
                Rational ratio = rhs_[static_cast<std::size_t>(i)] / a;
                if (leave < 0 || ratio < best ||
                    (ratio == best &&
                     basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded direction
            pivot(leave, s);
        }
    }

    bool phase_one() {
        in_phase_one_ = true;
        std::vector<Rational> costs(static_cast<std::size_t>(cols()), Rational(0));
        for (int j = 0; j < cols(); ++j)
            if (kind_[static_cast<std::size_t>(j)] == ColKind::Artificial)
                costs[static_cast<std::size_t>(j)] = 1;
        set_costs(costs);
        bool bounded = simplex_loop();
        if (!bounded)
            throw Error(ErrorCode::InternalInvariant, "phase-1 objective unbounded");
        in_phase_one_ = false;
        if (objval_ > 0) return false;

        // Drive leftover artificials out of the basis; rows that offer no
        // pivot column are redundant and get dropped.
        int m = static_cast<int>(tab_.size());
        for (int r = 0; r < m; ++r) {
            if (!row_alive_[static_cast<std::size_t>(r)]) continue;
            int b = basis_[static_cast<std::size_t>(r)];
            if (kind_[static_cast<std::size_t>(b)] != ColKind::Artificial) continue;
            int s = -1;
            for (int j = 0; j < cols(); ++j) {
                if (kind_[static_cast<std::size_t>(j)] == ColKind::Artificial) continue;
                if (tab_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) {
                    s = j;
                    break;
                }
            }
            if (s >= 0) {
                pivot(r, s);
            } else {
                row_alive_[static_cast<std::size_t>(r)] = false;
            }
        }
        return true;
    }

    LPSolution phase_two() {
        std::vector<Rational> costs(static_cast<std::size_t>(cols()), Rational(0));
        for (int j = 0; j < n_; ++j)
            costs[static_cast<std::size_t>(j)] = system_.objective()[static_cast<std::size_t>(j)];
        set_costs(costs);
        bool bounded = simplex_loop();

        LPSolution sol;
        if (!bounded) {
            sol.status = SolveStatus::Unbounded;
            return sol;
        }
        sol.status = SolveStatus::Optimal;
        sol.value = objval_;
        sol.primal.assign(static_cast<std::size_t>(n_), Rational(0));
        int m = static_cast<int>(tab_.size());
        for (int r = 0; r < m; ++r) {
            if (!row_alive_[static_cast<std::size_t>(r)]) continue;
            int b = basis_[static_cast<std::size_t>(r)];
            if (b < n_) sol.primal[static_cast<std::size_t>(b)] = rhs_[static_cast<std::size_t>(r)];
        }
        for (int r = 0; r < m; ++r) {
            const std::string& tag = system_.rows()[static_cast<std::size_t>(r)].tag;
            if (!row_alive_[static_cast<std::size_t>(r)]) {
                sol.dual[tag] = 0;
                continue;
            }
            Rational pi = -objrow_[static_cast<std::size_t>(marker_[static_cast<std::size_t>(r)])];
            if (flip_[static_cast<std::size_t>(r)] < 0) pi = -pi;
            sol.dual[tag] = pi;
        }
        sol.is_vertex = tight_rows_full_rank(system_.rows(), sol.primal);
        return sol;
    }
};

}  // namespace

bool tight_rows_full_rank(const std::vector<LinRow>& rows, const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    std::vector<std::vector<Rational>> span;
    auto insert = [&](std::vector<Rational> vec) {
        for (const auto& row : span) {
            int lead = -1;
            for (int j = 0; j < n; ++j)
                if (row[static_cast<std::size_t>(j)] != 0) {
                    lead = j;
                    break;
                }
            if (lead < 0) continue;
            const Rational& f = vec[static_cast<std::size_t>(lead)];
            if (f == 0) continue;
            Rational scale = f / row[static_cast<std::size_t>(lead)];
            for (int j = 0; j < n; ++j)
                vec[static_cast<std::size_t>(j)] -= scale * row[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j < n; ++j)
            if (vec[static_cast<std::size_t>(j)] != 0) {
                span.push_back(std::move(vec));
                return;
            }
    };
    for (const LinRow& row : rows) {
        Rational lhs = 0;
        for (const auto& [var, coeff] : row.coeffs) lhs += coeff * x[static_cast<std::size_t>(var)];
        if (lhs != row.rhs) continue;
        std::vector<Rational> vec(static_cast<std::size_t>(n), Rational(0));
        for (const auto& [var, coeff] : row.coeffs) vec[static_cast<std::size_t>(var)] = coeff;
        insert(std::move(vec));
        if (static_cast<int>(span.size()) == n) return true;
    }
    for (int j = 0; j < n; ++j) {
        if (x[static_cast<std::size_t>(j)] != 0) continue;
        std::vector<Rational> vec(static_cast<std::size_t>(n), Rational(0));
        vec[static_cast<std::size_t>(j)] = 1;
        insert(std::move(vec));
        if (static_cast<int>(span.size()) == n) return true;
    }
    return static_cast<int>(span.size()) == n;
}

std::vector<std::string> certificate_violations(const ConstraintSystem& system,
                                                const LPSolution& solution) {
    std::vector<std::string> out;
    if (solution.status != SolveStatus::Optimal) {
        out.push_back("solution is not optimal");
        return out;
    }
    const auto& x = solution.primal;
    for (int j = 0; j < system.variable_count(); ++j)
        if (x[static_cast<std::size_t>(j)] < 0)
            out.push_back("negative variable " + system.variables()[static_cast<std::size_t>(j)]);

    Rational dual_value = 0;
    for (const LinRow& row : system.rows()) {
        Rational lhs = 0;
        for (const auto& [var, coeff] : row.coeffs) lhs += coeff * x[static_cast<std::size_t>(var)];
        Rational pi = solution.dual_of(row.tag);
        bool tight = lhs == row.rhs;
        switch (row.sense) {
            case Sense::Le:
                if (lhs > row.rhs) out.push_back("primal violates " + row.tag);
                if (pi > 0) out.push_back("dual sign of " + row.tag);
                break;
            case Sense::Ge:
                if (lhs < row.rhs) out.push_back("primal violates " + row.tag);
                if (pi < 0) out.push_back("dual sign of " + row.tag);
                break;
            case Sense::Eq:
                if (!tight) out.push_back("primal violates " + row.tag);
                break;
        }
        if (pi != 0 && !tight) out.push_back("slackness of row " + row.tag);
        dual_value += pi * row.rhs;
    }

    // reduced costs: c_j - sum_r pi_r a_rj >= 0, and 0 on the support
    std::vector<Rational> reduced(system.objective());
    for (const LinRow& row : system.rows()) {
        Rational pi = solution.dual_of(row.tag);
        if (pi == 0) continue;
        for (const auto& [var, coeff] : row.coeffs)
            reduced[static_cast<std::size_t>(var)] -= pi * coeff;
    }
    for (int j = 0; j < system.variable_count(); ++j) {
        if (reduced[static_cast<std::size_t>(j)] < 0)
            out.push_back("dual infeasible at " + system.variables()[static_cast<std::size_t>(j)]);
        if (x[static_cast<std::size_t>(j)] > 0 && reduced[static_cast<std::size_t>(j)] != 0)
            out.push_back("slackness of variable " + system.variables()[static_cast<std::size_t>(j)]);
    }

    Rational primal_value = 0;
    for (int j = 0; j < system.variable_count(); ++j)
        primal_value += system.objective()[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    if (primal_value != solution.value) out.push_back("objective mismatch with primal");
    if (dual_value != solution.value) out.push_back("strong duality fails");
    return out;
}

LPSolution solve(const ConstraintSystem& system, const SolverOptions& options) {
    Simplex simplex(system, options);
    LPSolution sol = simplex.run();
    if (sol.status == SolveStatus::Optimal) {
        auto bad = certificate_violations(system, sol);
        if (!bad.empty()) throw Error(ErrorCode::InternalInvariant, bad);
    }
    return sol;
}

SeparationResult separate_spanning_tree(const FractionalPoint& x, const Graph& graph) {
    if (graph.node_count() > kMaxNodes)
        throw Error(ErrorCode::TooLarge, "separation enumerates subsets only up to 18 nodes");
    for (const auto& v : x.values)
        if (v < 0) throw Error(ErrorCode::InternalInvariant, "separation input must be nonnegative");

    SeparationResult best;
    NodeMask full = graph.full_mask();
    SetOrder order{&graph};
    for (NodeMask set = 1; set < full; ++set) {
        if (std::popcount(set) < 2) continue;
        Rational mass = inside_value(graph, x.values, set);
        Rational bound = std::popcount(set) - 1;
        if (mass <= bound) continue;
        Rational violation = mass - bound;
        if (best.all_satisfied || violation > best.violation ||
            (violation == best.violation && order(set, best.set))) {
            best.all_satisfied = false;
            best.set = set;
            best.violation = violation;
        }
    }
    return best;
}

LazySolveResult solve_with_lazy_rows(
    ConstraintSystem system,
    const std::function<std::optional<LinRow>(const std::vector<Rational>&)>& separator,
    const SolverOptions& options) {
    constexpr int kMaxRounds = 1 << 20;
    for (int round = 0; round < kMaxRounds; ++round) {
        LPSolution sol = solve(system, options);
        if (sol.status != SolveStatus::Optimal) return {std::move(system), std::move(sol)};
        if (!separator) return {std::move(system), std::move(sol)};
        auto row = separator(sol.primal);
        if (!row) return {std::move(system), std::move(sol)};
        system.add_row(std::move(*row));
    }
    throw Error(ErrorCode::InternalInvariant, "cutting-plane loop failed to terminate");
}

ChainLpResult solve_chain_lp(const Instance& instance, const Rational& lambda,
                             const SolverOptions& options) {
    if (lambda < 1)
        throw Error(ErrorCode::ValidationFailed, "chain LP requires lambda >= 1");
    const Graph& graph = instance.graph;

    ConstraintSystem system;
    for (const Edge& e : graph.edges()) {
        int var = system.add_variable(e.id);
        system.set_objective(var, e.cost);
    }

    LinRow span;
    span.tag = "span";
    span.sense = Sense::Eq;
    span.rhs = graph.node_count() - 1;
    for (int e = 0; e < graph.edge_count(); ++e) span.coeffs[e] = 1;
    system.add_row(std::move(span));

    for (std::size_t i = 0; i < instance.chain.size(); ++i) {
        const ChainSet& cs = instance.chain.set(i);
        LinRow row;
        row.tag = degree_row_tag(i);
        row.sense = Sense::Le;
        row.rhs = lambda * Rational(cs.bound);
        for (int e = 0; e < graph.edge_count(); ++e)
            if (graph.edge_crosses(e, cs.mask)) row.coeffs[e] = 1;
        system.add_row(std::move(row));
    }

    // all 2-element instances of the subset constraints, in set order
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
        if (any) system.add_row(std::move(row));
    }

    auto separator = [&graph](const std::vector<Rational>& primal) -> std::optional<LinRow> {
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

    LazySolveResult lazy = solve_with_lazy_rows(std::move(system), separator, options);
    ChainLpResult result;
    result.status = lazy.solution.status;
    result.system = std::move(lazy.system);
    if (result.status == SolveStatus::Optimal) {
        result.opt = lazy.solution.value;
        result.point = FractionalPoint{lazy.solution.primal};
    }
    result.solution = std::move(lazy.solution);
    return result;
}

}  // namespace mcst
