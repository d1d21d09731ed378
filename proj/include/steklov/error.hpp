#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steklov {

enum class ErrorCode {
  InvalidInput,
  SizeTooLarge,
  MultiplicityOverflow,
  EmptyWindow,
  WindowExceeded,
  DivergenceSuspected,
  ResolutionTooCoarse,
  FrequencyCountNotPow2,
  ThresholdAmbiguous,
  NotAsymptoticallyLinear,
  InsufficientSpectrum,
  NotPowerOfTwo,
  AmbiguousExclusion,
  NonPositiveLength,
  FrequencyNotFound,
  ZeroAmplitude,
  OddAdjacencyCount,
  AmbiguousAdjacency,
  WalkStuck,
  SignInconsistency,
  InvalidDiscriminant,
  ExceptionalAngle,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace steklov
