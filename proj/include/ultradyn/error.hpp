#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultradyn {

/// Precondition and hypothesis failures raised by the library.
enum class Errc {
  UndefinedInfiniteSum,
  NotPrime,
  DegreeTooSmall,
  ZeroInput,
  OutOfRange,
  DegenerateInput,
  IndexOutOfRange,
  InfiniteVd,
  NoPreimage,
  TraceTooShort,
  TameCaseUnsupported,
  MissingRootPointData,
  InconsistentRootPoint,
  EmptyGrid,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// A violated precondition or an input outside the hypotheses of the theory.
class DomainError : public std::invalid_argument {
 public:
  DomainError(Errc code, const std::string& what)
      : std::invalid_argument(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error("InternalInconsistency: " + what) {}
};

}  // namespace ultradyn
