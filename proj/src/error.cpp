#include "steklov/error.hpp"

namespace steklov {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::MultiplicityOverflow: return "MultiplicityOverflow";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::WindowExceeded: return "WindowExceeded";
    case ErrorCode::DivergenceSuspected: return "DivergenceSuspected";
    case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorCode::FrequencyCountNotPow2: return "FrequencyCountNotPow2";
    case ErrorCode::ThresholdAmbiguous: return "ThresholdAmbiguous";
    case ErrorCode::NotAsymptoticallyLinear: return "NotAsymptoticallyLinear";
    case ErrorCode::InsufficientSpectrum: return "InsufficientSpectrum";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::AmbiguousExclusion: return "AmbiguousExclusion";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::FrequencyNotFound: return "FrequencyNotFound";
    case ErrorCode::ZeroAmplitude: return "ZeroAmplitude";
    case ErrorCode::OddAdjacencyCount: return "OddAdjacencyCount";
    case ErrorCode::AmbiguousAdjacency: return "AmbiguousAdjacency";
    case ErrorCode::WalkStuck: return "WalkStuck";
    case ErrorCode::SignInconsistency: return "SignInconsistency";
    case ErrorCode::InvalidDiscriminant: return "InvalidDiscriminant";
    case ErrorCode::ExceptionalAngle: return "ExceptionalAngle";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace steklov
