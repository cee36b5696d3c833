#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace igusa {

// Base for all recoverable domain errors. `code` is stable and machine
// readable; the CLI maps it into error JSON.
struct DomainError : std::runtime_error {
  std::string code;
  DomainError(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

struct NotAUnit : DomainError {
  explicit NotAUnit(const std::string& m = "coefficient is not a p-adic unit")
      : DomainError("NotAUnit", m) {}
};
struct NotIntegral : DomainError {
  explicit NotIntegral(const std::string& m = "coefficient has negative p-valuation")
      : DomainError("NotIntegral", m) {}
};
struct ContextMismatch : DomainError {
  explicit ContextMismatch(const std::string& m = "operands live over different contexts")
      : DomainError("ContextMismatch", m) {}
};
struct NonIntegralEigenvalue : DomainError {
  explicit NonIntegralEigenvalue(const std::string& m = "theta eigenvalue is not p-integral")
      : DomainError("NonIntegralEigenvalue", m) {}
};
struct NotDepleted : DomainError {
  explicit NotDepleted(const std::string& m = "series is not P-depleted")
      : DomainError("NotDepleted", m) {}
};
struct NotInvertible : DomainError {
  explicit NotInvertible(const std::string& m = "matrix is not invertible over the base ring")
      : DomainError("NotInvertible", m) {}
};
struct NotInParabolic : DomainError {
  explicit NotInParabolic(const std::string& m = "a b^t = b a^t fails; not a parabolic element")
      : DomainError("NotInParabolic", m) {}
};
struct Unsupported : DomainError {
  explicit Unsupported(const std::string& m = "unsupported construction")
      : DomainError("Unsupported", m) {}
};
struct Truncated : DomainError {
  explicit Truncated(const std::string& m = "generation hit max_degree before stabilizing")
      : DomainError("Truncated", m) {}
};
struct NotHomogeneous : DomainError {
  explicit NotHomogeneous(const std::string& m = "form is not concentrated in a single Y-degree")
      : DomainError("NotHomogeneous", m) {}
};
struct NonVanishingConstant : DomainError {
  explicit NonVanishingConstant(const std::string& m = "polynomial has P(0) != 0")
      : DomainError("NonVanishingConstant", m) {}
};
struct NotClosed : DomainError {
  explicit NotClosed(const std::string& m = "form is not nabla-closed")
      : DomainError("NotClosed", m) {}
};
struct NoTermination : DomainError {
  explicit NoTermination(const std::string& m = "primitive recursion hit max_grade")
      : DomainError("NoTermination", m) {}
};
struct SyntaxError : DomainError {
  size_t position;
  SyntaxError(const std::string& m, size_t pos)
      : DomainError("SyntaxError", m + " at position " + std::to_string(pos)), position(pos) {}
};
struct IndexOutOfRange : DomainError {
  explicit IndexOutOfRange(const std::string& m = "variable index exceeds d_g")
      : DomainError("IndexOutOfRange", m) {}
};

}  // namespace igusa
