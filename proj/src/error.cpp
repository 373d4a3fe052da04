#include "mcst/error.hpp"

namespace mcst {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ValidationFailed: return "VALIDATION_FAILED";
        case ErrorCode::UnknownEdge: return "UNKNOWN_EDGE";
        case ErrorCode::UnknownPiece: return "UNKNOWN_PIECE";
        case ErrorCode::NotInPolytope: return "NOT_IN_POLYTOPE";
        case ErrorCode::NumericOverflow: return "NUMERIC_OVERFLOW";
        case ErrorCode::InternalInvariant: return "INTERNAL_INVARIANT";
        case ErrorCode::CsViolation: return "CS_VIOLATION";
        case ErrorCode::LemmaViolation: return "LEMMA_VIOLATION";
        case ErrorCode::ContractExceeded: return "CONTRACT_EXCEEDED";
        case ErrorCode::SearchBudgetExceeded: return "SEARCH_BUDGET_EXCEEDED";
        case ErrorCode::InfeasibleLp: return "INFEASIBLE_LP";
        case ErrorCode::P1Violation: return "P1_VIOLATION";
        case ErrorCode::P3Violation: return "P3_VIOLATION";
        case ErrorCode::CertFailed: return "CERT_FAILED";
        case ErrorCode::AdditiveViolation: return "ADDITIVE_VIOLATION";
        case ErrorCode::DependentContraction: return "DEPENDENT_CONTRACTION";
        case ErrorCode::TooLarge: return "TOO_LARGE";
    }
    return "UNKNOWN";
}

}  // namespace mcst
