#include "liftreg/errors.hpp"

namespace liftreg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kSingular: return "SINGULAR";
    case ErrorCode::kZeroVector: return "ZERO_VECTOR";
    case ErrorCode::kNotPrimitive: return "NOT_PRIMITIVE";
    case ErrorCode::kBoxTooLarge: return "BOX_TOO_LARGE";
    case ErrorCode::kEnumerationCap: return "ENUMERATION_CAP";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kNotSimplicial: return "NOT_SIMPLICIAL";
    case ErrorCode::kNotSupporting: return "NOT_SUPPORTING";
    case ErrorCode::kUnbounded: return "UNBOUNDED";
    case ErrorCode::kFNotInterior: return "F_NOT_INTERIOR";
    case ErrorCode::kFOutside: return "F_OUTSIDE";
    case ErrorCode::kNotOnFacet: return "NOT_ON_FACET";
    case ErrorCode::kNotLatticeFree: return "NOT_LATTICE_FREE";
    case ErrorCode::kMultipleLiftings: return "MULTIPLE_LIFTINGS";
    case ErrorCode::kHypothesisViolated: return "HYPOTHESIS_VIOLATED";
    case ErrorCode::kInvalidDelta: return "INVALID_DELTA";
    case ErrorCode::kNotType3: return "NOT_TYPE3";
    case ErrorCode::kValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::kSliceNotSimplex: return "SLICE_NOT_SIMPLEX";
    case ErrorCode::kDimensionUnsupported: return "DIMENSION_UNSUPPORTED";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace liftreg
