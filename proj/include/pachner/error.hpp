#pragma once

#include <stdexcept>
#include <string>

namespace pachner {

enum class ErrorKind {
    EmptyInput,
    MixedDimension,
    DuplicateVertexInFacet,
    NotAFace,
    NotAFacet,
    VertexClash,
    UnknownName,
    IndexOutOfRange,
    InvalidMove,
    NoValidMoves,
    InconsistentPrefix,
    NotASphereFVector,
    BaseNotInFacet,
    DimensionMismatch,
    ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , m_kind(kind)
    {}

    ErrorKind kind() const { return m_kind; }

private:
    ErrorKind m_kind;
};

} // namespace pachner
