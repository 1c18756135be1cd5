#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qident {

enum class ErrorKind {
  DivisionByZero,
  ExponentOverflow,
  NotDivisible,
  ZeroAtPole,
  ModeMismatch,
  OrderMismatch,
  NonInvertibleConstantTerm,
  NonTruncatingInfiniteProduct,
  NegativeValuation,
  SyntaxError,
  NonConvergent,
  NonIntegerIndex,
  UnboundVariable,
  NotAMonomial,
  UnknownCounter,
  UnknownWeight,
  UnknownSequence,
  UnknownBuiltin,
  UnknownIdentity,
  InvalidArgument,
  CatalogError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure in the library is reported through this type; `kind()` is
/// what reports and the CLI key on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qident
