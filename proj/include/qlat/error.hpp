#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlat {

enum class ErrorCode {
  NotAPartialOrder,
  NotALattice,
  NoBoundingElements,
  SizeBound,
  NotComparable,
  NotGraded,
  NotAtoms,
  NotAtomic,
  DepthExhausted,
  UnknownConstant,
  MissingSplit,
  RealizationMissing,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  Error(ErrorCode code, const std::string& message, std::vector<std::uint32_t> witness)
      : Error(code, message) {
    witness_ = std::move(witness);
  }

  ErrorCode code() const noexcept { return code_; }
  /// Offending element indices, when the failure has a concrete witness.
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace qlat
