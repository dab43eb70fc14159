#pragma once

#include <stdexcept>
#include <string>

namespace earanon {

// Every contract violation in the library throws Error with one of these
// codes. The CLI maps them onto its exit codes; tests match on the code.
enum class ErrorCode {
    MalformedLine,
    VertexOutOfRange,
    SelfLoop,
    DuplicateArc,
    CyclicGraph,
    NotContractible,
    ArcAbsent,
    TooManyArcs,
    CapExceeded,
    InvalidPermutation,
    DomainTooLarge,
    NotAcyclic,
    NotMaximalEar,
    InvalidSequence,
    BadTerminals,
    BadSequence,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

const char* errorCodeName(ErrorCode code);

} // namespace earanon
