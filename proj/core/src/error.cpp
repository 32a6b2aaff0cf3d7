#include "gmanvol/error.hpp"

namespace gmanvol {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidInvariants: return "InvalidInvariants";
    case ErrorCode::InvalidSlope: return "InvalidSlope";
    case ErrorCode::GenusZeroUnsupported: return "GenusZeroUnsupported";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::FiberSlope: return "FiberSlope";
    case ErrorCode::UnknownPiece: return "UnknownPiece";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorCode::BoundaryCountTooSmall: return "BoundaryCountTooSmall";
    case ErrorCode::DisconnectedCover: return "DisconnectedCover";
    case ErrorCode::IdCollision: return "IdCollision";
    case ErrorCode::EhnFails: return "EhnFails";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotPMJ: return "NotPMJ";
    case ErrorCode::PMJFormRequired: return "PMJFormRequired";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
      return 3;
    case ErrorCode::ValidationError:
    case ErrorCode::InvalidInvariants:
      return 1;
    default:
      return 2;
  }
}

}  // namespace gmanvol
