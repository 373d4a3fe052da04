#ifndef MCST_JSON_IO_HPP
#define MCST_JSON_IO_HPP

#include <json.hpp>

#include "mcst/decomposition.hpp"
#include "mcst/instance.hpp"
#include "mcst/lagrangian.hpp"
#include "mcst/lp.hpp"
#include "mcst/matroid.hpp"
#include "mcst/oracle.hpp"
#include "mcst/rainbow.hpp"
#include "mcst/reduction.hpp"
#include "mcst/rounding.hpp"

namespace mcst {

using Json = nlohmann::ordered_json;

/// Integral rationals serialize as decimal strings, others as {num, den}.
/// Accepted inputs: integral JSON numbers, decimal strings, "p/q" strings,
/// and {num, den} objects. Non-integral JSON floats are rejected as inexact.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);

RawInstance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& instance);

Json point_to_json(const Graph& graph, const FractionalPoint& point);
FractionalPoint point_from_json(const Graph& graph, const Json& doc);

Json solution_to_json(const ConstraintSystem& system, const LPSolution& solution);
Json chain_lp_to_json(const ChainLpResult& result);

Json decomposition_to_json(const Graph& graph, const LaminarDecomposition& decomp);
Json rainbow_result_to_json(const Instance& instance, const FractionalPoint& x_before,
                            const LaminarDecomposition& decomp_before,
                            const RainbowFreeResult& result);

Json dual_certificate_to_json(const Graph& graph, const DualCertificate& cert);
Json pipeline_certificate_to_json(const Instance& instance, const RoundingCertificate& cert);

/// Independent re-check of an emitted pipeline certificate from the JSON
/// artifacts alone; returns every discrepancy found (empty = verified).
std::vector<std::string> recheck_pipeline_certificate(const Instance& instance, const Json& cert);

MatroidOracle matroid_from_json(const Json& doc);
BudgetedInstance budgeted_instance_from_json(const Json& doc);

/// Packing problem with an explicit polytope description (rows with senses).
PackingProblem packing_problem_from_json(const Json& doc);

Json reduction_result_to_json(const PackingProblem& problem, const ReductionResult& result);
Json kbudget_result_to_json(const BudgetedInstance& instance, const KBudgetResult& result,
                            const Rational& eps, const Rational& nu);
Json oracle_report_to_json(const Instance& instance);
Json matroid_oracle_report_to_json(const BudgetedInstance& instance);

}  // namespace mcst

#endif
