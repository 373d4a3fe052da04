#ifndef MCST_ERROR_HPP
#define MCST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mcst {

enum class ErrorCode {
    ValidationFailed,
    UnknownEdge,
    UnknownPiece,
    NotInPolytope,
    NumericOverflow,
    InternalInvariant,
    CsViolation,
    LemmaViolation,
    ContractExceeded,
    SearchBudgetExceeded,
    InfeasibleLp,
    P1Violation,
    P3Violation,
    CertFailed,
    AdditiveViolation,
    DependentContraction,
    TooLarge,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code plus per-item details
/// (validation reports every violation at once).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(error_code_name(code) + std::string(": ") + message),
          code_(code),
          details_{std::move(message)} {}

    Error(ErrorCode code, std::vector<std::string> details)
        : std::runtime_error(error_code_name(code) + std::string(": ") + join(details)),
          code_(code),
          details_(std::move(details)) {}

    ErrorCode code() const { return code_; }
    const std::vector<std::string>& details() const { return details_; }

  private:
    static std::string join(const std::vector<std::string>& parts) {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) out += "; ";
            out += parts[i];
        }
        return out;
    }

    ErrorCode code_;
    std::vector<std::string> details_;
};

}  // namespace mcst

#endif
