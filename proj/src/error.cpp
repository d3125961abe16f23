#include "pachner/error.hpp"

namespace pachner {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MixedDimension: return "MixedDimension";
    case ErrorKind::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::VertexClash: return "VertexClash";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::NoValidMoves: return "NoValidMoves";
    case ErrorKind::InconsistentPrefix: return "InconsistentPrefix";
    case ErrorKind::NotASphereFVector: return "NotASphereFVector";
    case ErrorKind::BaseNotInFacet: return "BaseNotInFacet";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace pachner
