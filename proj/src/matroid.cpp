#include "mcst/matroid.hpp"

#include <algorithm>
#include <bit>
#include <future>

#include "mcst/dsu.hpp"
#include "mcst/error.hpp"
#include "mcst/oracle.hpp"
#include "mcst/reduction.hpp"

namespace mcst {

MatroidOracle::MatroidOracle(std::string kind, std::vector<std::string> ground,
                             std::function<bool(ElemMask)> independent)
    : kind_(std::move(kind)), ground_(std::move(ground)), independent_(std::move(independent)) {
    if (ground_.size() > kMaxNodes)
        throw Error(ErrorCode::TooLarge, "matroid ground sets are capped at 18 elements");
}

MatroidOracle MatroidOracle::graphic(const Graph& graph) {
    std::vector<std::string> ground;
    for (const Edge& e : graph.edges()) ground.push_back(e.id);
    std::size_t nodes = static_cast<std::size_t>(graph.node_count());
    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : graph.edges()) ends.emplace_back(e.u, e.v);
    auto indep = [nodes, ends](ElemMask mask) {
        Dsu dsu(nodes);
        for (std::size_t e = 0; e < ends.size(); ++e) {
            if (!(mask >> e & 1)) continue;
            if (!dsu.unite(static_cast<std::size_t>(ends[e].first),
                           static_cast<std::size_t>(ends[e].second)))
                return false;
        }
        return true;
    };
    return MatroidOracle("graphic", std::move(ground), indep);
}

MatroidOracle MatroidOracle::uniform(int n, int r) {
    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back("g" + std::to_string(i));
    return uniform(std::move(ground), r);
}

MatroidOracle MatroidOracle::uniform(std::vector<std::string> ground, int r) {
    auto indep = [r](ElemMask mask) { return std::popcount(mask) <= r; };
    return MatroidOracle("uniform", std::move(ground), indep);
}

MatroidOracle MatroidOracle::partition(const std::vector<std::vector<std::string>>& blocks,
                                       const std::vector<int>& caps) {
    if (blocks.size() != caps.size())
        throw Error(ErrorCode::ValidationFailed, "one cap per partition block required");
    std::vector<std::string> ground;
    std::vector<ElemMask> block_masks;
    for (const auto& block : blocks) {
        ElemMask mask = 0;
        for (const auto& id : block) {
            mask |= ElemMask(1) << ground.size();
            ground.push_back(id);
        }
        block_masks.push_back(mask);
    }
    auto indep = [block_masks, caps](ElemMask mask) {
        for (std::size_t b = 0; b < block_masks.size(); ++b)
            if (std::popcount(mask & block_masks[b]) > caps[b]) return false;
        return true;
    };
    return MatroidOracle("partition", std::move(ground), indep);
}

int MatroidOracle::element_index(const std::string& id) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == id) return static_cast<int>(i);
    return -1;
}

int MatroidOracle::rank(ElemMask subset) const {
    ElemMask current = 0;
    for (int i = 0; i < size(); ++i) {
        if (!(subset >> i & 1)) continue;
        ElemMask next = current | (ElemMask(1) << i);
        if (independent_(next)) current = next;
    }
    return std::popcount(current);
}

bool MatroidOracle::is_basis(ElemMask subset) const {
    return independent_(subset) && std::popcount(subset) == rank_full();
}

ElemMask MatroidOracle::mask_of(const std::vector<std::string>& ids) const {
    ElemMask mask = 0;
    for (const auto& id : ids) {
        int i = element_index(id);
        if (i < 0) throw Error(ErrorCode::ValidationFailed, "unknown element: " + id);
        mask |= ElemMask(1) << i;
    }
    return mask;
}

std::vector<std::string> MatroidOracle::ids_of(ElemMask mask) const {
    std::vector<std::string> ids;
    for (int i = 0; i < size(); ++i)
        if (mask >> i & 1) ids.push_back(ground_[static_cast<std::size_t>(i)]);
    return ids;
}

MatroidOracle matroid_minor(const MatroidOracle& matroid, ElemMask contract, ElemMask del) {
    if ((contract & del) != 0)
        throw Error(ErrorCode::ValidationFailed, "contracted and deleted elements overlap");
    if (!matroid.independent(contract))
        throw Error(ErrorCode::DependentContraction, "contraction set must be independent");

    std::vector<std::string> ground;
    std::vector<int> origin;  // surviving index -> original index
    for (int i = 0; i < matroid.size(); ++i) {
        if ((contract | del) >> i & 1) continue;
        ground.push_back(matroid.ground()[static_cast<std::size_t>(i)]);
        origin.push_back(i);
    }
    MatroidOracle base = matroid;
    auto indep = [base, origin, contract](ElemMask mask) {
        ElemMask lifted = contract;
        for (std::size_t i = 0; i < origin.size(); ++i)
            if (mask >> i & 1) lifted |= ElemMask(1) << origin[i];
        return base.independent(lifted);
    };
    return MatroidOracle("minor-of", std::move(ground), indep);
}

Rational BudgetedInstance::length_of(std::size_t i, ElemMask subset) const {
    Rational total = 0;
    for (std::size_t e = 0; e < lengths[i].size(); ++e)
        if (subset >> e & 1) total += lengths[i][e];
    return total;
}

void validate_budgeted_instance(const BudgetedInstance& instance) {
    std::vector<std::string> bad;
    if (instance.k() == 0) bad.push_back("at least one budget required");
    if (instance.budgets.size() != instance.k())
        bad.push_back("one budget per length vector required");
    if (instance.objective_index >= instance.k()) bad.push_back("objective index out of range");
    for (std::size_t i = 0; i < instance.k(); ++i) {
        if (instance.lengths[i].size() != static_cast<std::size_t>(instance.matroid.size()))
            bad.push_back("length vector " + std::to_string(i + 1) + " has wrong width");
        for (const auto& d : instance.lengths[i])
            if (d < 0) bad.push_back("negative length in vector " + std::to_string(i + 1));
    }
    for (const auto& budget : instance.budgets)
        if (budget < 0) bad.push_back("negative budget");
    if (!bad.empty()) throw Error(ErrorCode::ValidationFailed, bad);
}

std::vector<Rational> delta_vector(const BudgetedInstance& instance) {
    std::vector<Rational> delta;
    for (std::size_t i = 0; i < instance.k(); ++i) {
        if (i == instance.objective_index) continue;
        Rational worst = 0;
        for (const auto& d : instance.lengths[i])
            if (d > worst) worst = d;
        delta.push_back(worst);
    }
    return delta;
}

namespace {

std::string rank_row_tag(const MatroidOracle& matroid, ElemMask set) {
    std::string key;
    auto ids = matroid.ids_of(set);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) key += ",";
        key += ids[i];
    }
    return "rk:" + key;
}

/// Orders element sets by (size, lexicographic identifier sequence).
bool elem_set_less(const MatroidOracle& matroid, ElemMask a, ElemMask b) {
    int ca = std::popcount(a);
    int cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    auto ia = matroid.ids_of(a);
    auto ib = matroid.ids_of(b);
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    return ia < ib;
}

PackingProblem matroid_as_packing(const BudgetedInstance& instance) {
    const MatroidOracle& matroid = instance.matroid;
    PackingProblem problem;
    problem.polytope.variables = matroid.ground();
    problem.c = instance.lengths[instance.objective_index];

    LinRow rank_row;
    rank_row.tag = "rank";
    rank_row.sense = Sense::Eq;
    rank_row.rhs = matroid.rank_full();
    for (int e = 0; e < matroid.size(); ++e) rank_row.coeffs[e] = 1;
    problem.polytope.eq_rows.push_back(std::move(rank_row));

    for (int e = 0; e < matroid.size(); ++e) {
        LinRow row;
        row.tag = rank_row_tag(matroid, ElemMask(1) << e);
        row.sense = Sense::Le;
        row.rhs = matroid.rank(ElemMask(1) << e);
        row.coeffs[e] = 1;
        problem.polytope.initial_rows.push_back(std::move(row));
    }

    MatroidOracle captured = matroid;
    problem.polytope.separator = [captured](const std::vector<Rational>& x)
        -> std::optional<LinRow> {
        ElemMask full = captured.full_mask();
        bool found = false;
        ElemMask best_set = 0;
        Rational best_violation;
        for (ElemMask set = 1; set < full; ++set) {
            if (std::popcount(set) < 2) continue;
            Rational mass = 0;
            for (int e = 0; e < captured.size(); ++e)
                if (set >> e & 1) mass += x[static_cast<std::size_t>(e)];
            Rational bound = captured.rank(set);
            if (mass <= bound) continue;
            Rational violation = mass - bound;
            if (!found || violation > best_violation ||
                (violation == best_violation && elem_set_less(captured, set, best_set))) {
                found = true;
                best_set = set;
                best_violation = violation;
            }
        }
        if (!found) return std::nullopt;
        LinRow row;
        row.tag = rank_row_tag(captured, best_set);
        row.sense = Sense::Le;
        row.rhs = captured.rank(best_set);
        for (int e = 0; e < captured.size(); ++e)
            if (best_set >> e & 1) row.coeffs[e] = 1;
        return row;
    };

    problem.polytope.all_rows = [captured]() {
        std::vector<LinRow> rows;
        LinRow eq;
        eq.tag = "rank";
        eq.sense = Sense::Eq;
        eq.rhs = captured.rank_full();
        for (int e = 0; e < captured.size(); ++e) eq.coeffs[e] = 1;
        rows.push_back(std::move(eq));
        ElemMask full = captured.full_mask();
        for (ElemMask set = 1; set < full; ++set) {
            LinRow row;
            row.tag = rank_row_tag(captured, set);
            row.sense = Sense::Le;
            row.rhs = captured.rank(set);
            for (int e = 0; e < captured.size(); ++e)
                if (set >> e & 1) row.coeffs[e] = 1;
            rows.push_back(std::move(row));
        }
        return rows;
    };

    problem.polytope.linear_min_value = [captured](const std::vector<Rational>& costs) {
        // matroid greedy: ascending (cost, index) over the independence oracle
        std::vector<int> order(static_cast<std::size_t>(captured.size()));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return costs[static_cast<std::size_t>(a)] < costs[static_cast<std::size_t>(b)];
        });
        ElemMask current = 0;
        Rational value = 0;
        for (int e : order) {
            ElemMask next = current | (ElemMask(1) << e);
            if (captured.independent(next)) {
                current = next;
                value += costs[static_cast<std::size_t>(e)];
            }
        }
        if (std::popcount(current) != captured.rank_full())
            throw Error(ErrorCode::InternalInvariant, "greedy failed to build a basis");
        return value;
    };

    for (std::size_t i = 0; i < instance.k(); ++i) {
        if (i == instance.objective_index) continue;
        problem.A.push_back(instance.lengths[i]);
        problem.b.push_back(instance.budgets[i]);
        problem.row_tags.push_back("pack:d" + std::to_string(i + 1));
    }
    return problem;
}

}  // namespace

BasisLpResult basis_lp(const BudgetedInstance& instance) {
    validate_budgeted_instance(instance);
    PackingProblem problem = matroid_as_packing(instance);
    std::vector<Rational> zero(problem.rows(), Rational(0));
    RelaxationResult relax = solve_relaxation(problem, Scaling::additive(zero));
    BasisLpResult result;
    result.status = relax.status;
    if (relax.status == SolveStatus::Optimal) {
        result.value = relax.value;
        result.point = FractionalPoint{relax.x};
        result.duals = relax.y;
    }
    return result;
}

BnRoundResult bn_round(const MatroidOracle& matroid, const FractionalPoint& x,
                       const std::vector<std::vector<Rational>>& packing_rows,
                       unsigned long k, const Rational& nu) {
    if (x.values.size() != static_cast<std::size_t>(matroid.size()))
        throw Error(ErrorCode::InternalInvariant, "point has wrong dimension for the matroid");

    std::vector<Rational> delta;
    for (const auto& row : packing_rows) {
        Rational worst = 0;
        for (const auto& v : row)
            if (v > worst) worst = v;
        delta.push_back(worst);
    }

    // tight rank constraints at x
    std::vector<std::pair<ElemMask, int>> tight;
    ElemMask full = matroid.full_mask();
    for (ElemMask set = 1; set <= full; ++set) {
        Rational mass = 0;
        for (int e = 0; e < matroid.size(); ++e)
            if (set >> e & 1) mass += x.values[static_cast<std::size_t>(e)];
        int r = matroid.rank(set);
        if (mass > r)
            throw Error(ErrorCode::InternalInvariant, "point violates a rank constraint");
        if (mass == r) tight.emplace_back(set, r);
    }

    ElemMask support = 0;
    for (int e = 0; e < matroid.size(); ++e)
        if (x.values[static_cast<std::size_t>(e)] > 0) support |= ElemMask(1) << e;

    auto load = [&](const std::vector<Rational>& row, ElemMask basis) {
        Rational total = 0;
        for (int e = 0; e < matroid.size(); ++e)
            if (basis >> e & 1) total += row[static_cast<std::size_t>(e)];
        return total;
    };
    std::vector<Rational> frac_loads;
    for (const auto& row : packing_rows) {
        Rational total = 0;
        for (int e = 0; e < matroid.size(); ++e)
            total += row[static_cast<std::size_t>(e)] * x.values[static_cast<std::size_t>(e)];
        frac_loads.push_back(total);
    }

    bool found = false;
    ElemMask best = 0;
    Rational best_score;
    std::vector<Rational> best_dev;
    for (const auto& basis_elems : all_bases(matroid)) {
        ElemMask basis = 0;
        for (int e : basis_elems) basis |= ElemMask(1) << e;
        if ((basis & ~support) != 0) continue;
        bool on_face = true;
        for (const auto& [set, r] : tight)
            if (std::popcount(basis & set) != r) {
                on_face = false;
                break;
            }
        if (!on_face) continue;

        Rational score = 0;
        std::vector<Rational> dev;
        for (std::size_t i = 0; i < packing_rows.size(); ++i) {
            Rational d = load(packing_rows[i], basis) - frac_loads[i];
            if (d < 0) d = -d;
            dev.push_back(d);
            if (delta[i] > 0) {
                Rational norm = d / delta[i];
                if (norm > score) score = norm;
            }
        }
        if (!found || score < best_score || (score == best_score && basis < best)) {
            found = true;
            best = basis;
            best_score = score;
            best_dev = std::move(dev);
        }
    }
    if (!found)
        throw Error(ErrorCode::InternalInvariant,
                    "minimal face carries no basis although x is in the base polytope");

    for (std::size_t i = 0; i < packing_rows.size(); ++i)
        if (!le_coeff_sqrt(best_dev[i], nu * delta[i], k))
            throw Error(ErrorCode::ContractExceeded,
                        "rounding deviation " + rational_to_string(best_dev[i]) +
                            " exceeds nu*sqrt(k)*delta on packing row " + std::to_string(i + 1));
    return BnRoundResult{best, best_dev};
}

AdditiveSolveResult budgeted_additive_solve(const BudgetedInstance& instance, const Rational& nu) {
    validate_budgeted_instance(instance);
    if (nu <= 0) throw Error(ErrorCode::ValidationFailed, "nu must be positive");
    PackingProblem problem = matroid_as_packing(instance);

    AdditiveSolveResult result;
    std::vector<Rational> zero(problem.rows(), Rational(0));
    RelaxationResult w0 = solve_relaxation(problem, Scaling::additive(zero));
    if (w0.status != SolveStatus::Optimal) return result;
    if (w0.value > instance.budgets[instance.objective_index]) return result;

    Rational sqrt_up = sqrt_upper_bound(static_cast<unsigned long>(instance.k()));
    std::vector<Rational> delta = delta_vector(instance);
    std::vector<Rational> delta_used;
    for (const auto& d : delta) delta_used.push_back(nu * sqrt_up * d);

    MatroidOracle matroid = instance.matroid;
    auto rows = problem.A;
    unsigned long k = static_cast<unsigned long>(instance.k());
    Fpra fpra;
    fpra.kind = FpraKind::Additive;
    fpra.round = [matroid, rows, k, nu](const std::vector<Rational>& x) {
        BnRoundResult rounded = bn_round(matroid, FractionalPoint{x}, rows, k, nu);
        std::vector<Rational> hat(x.size(), Rational(0));
        for (int e = 0; e < matroid.size(); ++e)
            if (rounded.basis >> e & 1) hat[static_cast<std::size_t>(e)] = 1;
        return hat;
    };

    ReductionResult reduced = reduce_additive(problem, delta_used, fpra);
    if (!reduced.feasible)
        throw Error(ErrorCode::InternalInvariant, "relaxed program lost feasibility");

    ElemMask basis = 0;
    for (int e = 0; e < matroid.size(); ++e)
        if (reduced.certificate.x_hat[static_cast<std::size_t>(e)] > 0)
            basis |= ElemMask(1) << e;
    if (!matroid.is_basis(basis))
        throw Error(ErrorCode::InternalInvariant, "rounded point is not a basis");

    result.feasible = true;
    result.basis = basis;
    result.certificate.opt_zero = w0.value;
    result.certificate.opt_delta = reduced.certificate.opt_relaxed;
    result.certificate.delta_used = delta_used;
    for (std::size_t i = 0; i < instance.k(); ++i)
        result.certificate.basis_lengths.push_back(instance.length_of(i, basis));

    if (result.certificate.basis_lengths[instance.objective_index] >
        instance.budgets[instance.objective_index])
        throw Error(ErrorCode::CertFailed, "objective budget violated by the rounded basis");
    std::size_t pack = 0;
    for (std::size_t i = 0; i < instance.k(); ++i) {
        if (i == instance.objective_index) continue;
        if (result.certificate.basis_lengths[i] > instance.budgets[i] + 2 * delta_used[pack])
            throw Error(ErrorCode::CertFailed, "additive budget bound violated");
        ++pack;
    }
    return result;
}

ElemMask heavy_elements(const BudgetedInstance& instance, const Rational& eps,
                        const Rational& nu) {
    validate_budgeted_instance(instance);
    if (eps <= 0 || nu <= 0)
        throw Error(ErrorCode::ValidationFailed, "eps and nu must be positive");
    Rational sqrt_up = sqrt_upper_bound(static_cast<unsigned long>(instance.k()));
    ElemMask heavy = 0;
    for (int e = 0; e < instance.matroid.size(); ++e) {
        for (std::size_t i = 0; i < instance.k(); ++i) {
            if (2 * nu * sqrt_up * instance.lengths[i][static_cast<std::size_t>(e)] >
                eps * instance.budgets[i]) {
                heavy |= ElemMask(1) << e;
                break;
            }
        }
    }
    return heavy;
}

namespace {

std::string join_ids(const MatroidOracle& matroid, ElemMask mask) {
    std::string out;
    for (const auto& id : matroid.ids_of(mask)) {
        if (!out.empty()) out += ",";
        out += id;
    }
    return out;
}

std::optional<ElemMask> try_subset(const BudgetedInstance& instance, const Rational& eps,
                                   const Rational& nu, ElemMask heavy, ElemMask chosen) {
    const MatroidOracle& matroid = instance.matroid;
    std::vector<Rational> residual;
    for (std::size_t i = 0; i < instance.k(); ++i)
        residual.push_back(instance.budgets[i] - instance.length_of(i, chosen));
    MatroidOracle minor = matroid_minor(matroid, chosen, heavy & ~chosen);

    BudgetedInstance rest;
    rest.matroid = minor;
    rest.budgets = residual;
    rest.objective_index = instance.objective_index;
    std::vector<int> origin;
    for (const auto& id : minor.ground()) origin.push_back(matroid.element_index(id));
    for (std::size_t i = 0; i < instance.k(); ++i) {
        std::vector<Rational> row;
        for (int o : origin) row.push_back(instance.lengths[i][static_cast<std::size_t>(o)]);
        rest.lengths.push_back(std::move(row));
    }

    AdditiveSolveResult inner = budgeted_additive_solve(rest, nu);
    if (!inner.feasible) return std::nullopt;

    ElemMask basis = chosen;
    for (int e = 0; e < minor.size(); ++e)
        if (inner.basis >> e & 1)
            basis |= ElemMask(1) << origin[static_cast<std::size_t>(e)];

    // step-1(d) verification, fully independent of the inner run
    if (!matroid.is_basis(basis)) return std::nullopt;
    if (instance.length_of(instance.objective_index, basis) >
        instance.budgets[instance.objective_index])
        return std::nullopt;
    for (std::size_t i = 0; i < instance.k(); ++i) {
        if (i == instance.objective_index) continue;
        if (instance.length_of(i, basis) > (1 + eps) * instance.budgets[i]) return std::nullopt;
    }
    return basis;
}

}  // namespace

KBudgetResult kbudget_solve(const BudgetedInstance& instance, const Rational& eps,
                            const Rational& nu, int jobs) {
    validate_budgeted_instance(instance);
    if (eps <= 0) throw Error(ErrorCode::ValidationFailed, "eps must be positive");
    if (nu <= 0) throw Error(ErrorCode::ValidationFailed, "nu must be positive");
    if (jobs < 1) jobs = 1;

    const MatroidOracle& matroid = instance.matroid;
    ElemMask heavy = heavy_elements(instance, eps, nu);
    std::vector<int> heavy_elems;
    for (int e = 0; e < matroid.size(); ++e)
        if (heavy >> e & 1) heavy_elems.push_back(e);

    // |H~| <= 2*nu*k^1.5/eps, evaluated through the rational upper bound of
    // sqrt(k) (a larger cap only adds iterations)
    Rational sqrt_up = sqrt_upper_bound(static_cast<unsigned long>(instance.k()));
    Rational cap_exact = 2 * nu * Rational(static_cast<long>(instance.k())) * sqrt_up / eps;
    Integer cap_floor;
    mpz_fdiv_q(cap_floor.get_mpz_t(), cap_exact.get_num().get_mpz_t(),
               cap_exact.get_den().get_mpz_t());
    std::size_t cap = heavy_elems.size();
    if (cap_floor < static_cast<long>(cap)) cap = static_cast<std::size_t>(cap_floor.get_si());

    // enumerate subsets of the heavy set by (size, lexicographic index order)
    std::vector<ElemMask> subsets;
    std::vector<int> pickbuf;
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t from, std::size_t left) {
        if (left == 0) {
            ElemMask mask = 0;
            for (int e : pickbuf) mask |= ElemMask(1) << e;
            subsets.push_back(mask);
            return;
        }
        for (std::size_t i = from; i + left <= heavy_elems.size(); ++i) {
            pickbuf.push_back(heavy_elems[i]);
            gen(i + 1, left - 1);
            pickbuf.pop_back();
        }
    };
    for (std::size_t s = 0; s <= cap; ++s) gen(0, s);

    KBudgetResult result;
    std::size_t index = 0;
    while (index < subsets.size()) {
        std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                  subsets.size() - index);
        std::vector<std::future<std::optional<ElemMask>>> futures;
        for (std::size_t j = 0; j < batch; ++j) {
            ElemMask chosen = subsets[index + j];
            if (!matroid.independent(chosen)) {
                futures.emplace_back();
                result.skipped.push_back("dependent: {" + join_ids(matroid, chosen) + "}");
                continue;
            }
            bool over_budget = false;
            for (std::size_t i = 0; i < instance.k(); ++i)
                if (instance.length_of(i, chosen) > instance.budgets[i]) {
                    over_budget = true;
                    break;
                }
            if (over_budget) {
                futures.emplace_back();
                result.skipped.push_back("over budget: {" + join_ids(matroid, chosen) + "}");
                continue;
            }
            if (jobs == 1) {
                std::promise<std::optional<ElemMask>> ready;
                ready.set_value(try_subset(instance, eps, nu, heavy, chosen));
                futures.push_back(ready.get_future());
            } else {
                futures.push_back(std::async(std::launch::async, [&, chosen]() {
                    return try_subset(instance, eps, nu, heavy, chosen);
                }));
            }
        }
        for (std::size_t j = 0; j < batch; ++j) {
            if (!futures[j].valid()) continue;
            auto basis = futures[j].get();
            ++result.iterations;
            if (basis && !result.feasible) {
                result.feasible = true;
                result.basis = *basis;
            }
        }
        if (result.feasible) return result;
        index += batch;
    }
    return result;
}

}  // namespace mcst
