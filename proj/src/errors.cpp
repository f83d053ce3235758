#include "treepeak/errors.hpp"

namespace treepeak {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::NegativeCapacity: return "NegativeCapacity";
    case ErrorCode::CandidateNotInSubset: return "CandidateNotInSubset";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::IllegalAttachment: return "IllegalAttachment";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::NotSinglePeakedOnTree: return "NotSinglePeakedOnTree";
    case ErrorCode::TooManyLeaves: return "TooManyLeaves";
    case ErrorCode::TooManyInternal: return "TooManyInternal";
    case ErrorCode::WrongScoringShape: return "WrongScoringShape";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace treepeak
