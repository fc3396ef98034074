#include "cutpoly/error.hpp"

namespace cutpoly {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EqualCuts: return "EqualCuts";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::ActuallyAdjacent: return "ActuallyAdjacent";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::DisconnectedSkeleton: return "DisconnectedSkeleton";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::PartTooSmall: return "PartTooSmall";
    case ErrorCode::BadSpec: return "BadSpec";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, int line) {
    std::string out(to_string(code));
    if (line > 0)
        out += " (line " + std::to_string(line) + ")";
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

} // namespace cutpoly
