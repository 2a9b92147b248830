#include "switchiso/error.hpp"

namespace switchiso {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kUnknownGraph: return "UnknownGraph";
    case ErrorCode::kInvalidParam: return "InvalidParam";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kNotAutomorphism: return "NotAutomorphism";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace switchiso
