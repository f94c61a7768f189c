#include "sprs/error.hpp"

namespace sprs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::BitIndexOutOfRange: return "BitIndexOutOfRange";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::NonUnitWeight: return "NonUnitWeight";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::TrivialPath: return "TrivialPath";
    case ErrorCode::ProbeOutOfRange: return "ProbeOutOfRange";
    case ErrorCode::KOdd: return "KOdd";
    case ErrorCode::KEven: return "KEven";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::InvalidBound: return "InvalidBound";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::UnknownReduction: return "UnknownReduction";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace sprs
