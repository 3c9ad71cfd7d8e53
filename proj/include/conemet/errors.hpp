#ifndef CONEMET_ERRORS_HPP
#define CONEMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conemet {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation point coincides with one of the punctures z = 0, 1.
struct SingularPointError : DomainError {
  explicit SingularPointError(const std::string& msg) : DomainError(msg) {}
};

// A point on the branch cut [1,inf) was passed without a side tag,
// or a side tag was given for a point off the cut.
struct CutSideError : DomainError {
  explicit CutSideError(const std::string& msg) : DomainError(msg) {}
};

// The requested quantity is infinite (e.g. K_a at z = 1).
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A series or quadrature failed to reach its target accuracy.
struct NoConvergenceError : std::runtime_error {
  explicit NoConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or ill-conditioned function parameters.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace conemet

#endif
