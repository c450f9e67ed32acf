#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  InvalidArgument,
  NotHomogeneous,
  ZeroPolynomial,
  SingularMatrix,
  DomainMismatch,
  DegeneratePencil,
  ResourceLimit,
  NotZeroDimensional,
  NotACriticalPoint,
  NotIsolated,
  NotTame,
  TransversalityNotFound,
  IncompleteEnumeration,
  InconsistentMu,
  NonIntegralResult,
  KNotDividingD,
  Hypothesis,
  PositiveDimensionalFiber,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Process exit status for an error: 1 bad input, 2 unmet hypothesis or
// resource limit, 3 internal inconsistency.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the byte offset into the parsed text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Syntax, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cremona
