#include "cpn/error.hpp"

namespace cpn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::MissingPhase: return "MissingPhase";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EdgePoint: return "EdgePoint";
    case ErrorCode::OutsideChart: return "OutsideChart";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::NotMaxEntangled: return "NotMaxEntangled";
    case ErrorCode::InvalidSigma: return "InvalidSigma";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cpn
