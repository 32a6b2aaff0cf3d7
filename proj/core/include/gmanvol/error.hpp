#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmanvol {

enum class ErrorCode {
  ParseError,
  ValidationError,
  InvalidInvariants,
  InvalidSlope,
  GenusZeroUnsupported,
  EmptyInput,
  FiberSlope,
  UnknownPiece,
  NonIntegralGenus,
  NotPrime,
  PrimeTooSmall,
  BoundaryCountTooSmall,
  DisconnectedCover,
  IdCollision,
  EhnFails,
  WrongCase,
  NotAdjacent,
  NotPMJ,
  PMJFormRequired,
  ArithmeticOverflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Process exit status for an error: 1 validation failure, 2 unsupported
/// input, 3 unreadable or malformed input.
int exit_code(ErrorCode code) noexcept;

/// One violated invariant. `code` is a stable machine tag, `message` is
/// for humans, `where` locates the offending item (may be empty).
struct Violation {
  std::string code;
  std::string message;
  std::string where;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::string hint = {})
      : std::runtime_error(what), code_(code), hint_(std::move(hint)) {}

  Error(ErrorCode code, const std::string& what, std::vector<Violation> violations)
      : std::runtime_error(what), code_(code), violations_(std::move(violations)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& hint() const noexcept { return hint_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  ErrorCode code_;
  std::string hint_;
  std::vector<Violation> violations_;
};

}  // namespace gmanvol
