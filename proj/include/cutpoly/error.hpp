#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutpoly {

enum class ErrorCode {
    Malformed,
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    EqualCuts,
    NotAdjacent,
    ActuallyAdjacent,
    LimitExceeded,
    NotSubgraph,
    DisconnectedSkeleton,
    SizeMismatch,
    UnknownIndex,
    WrongClass,
    PartTooSmall,
    BadSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `line()` is the 1-based input line
/// for parse errors and 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, int line = 0);

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    ErrorCode code_;
    int line_;
};

} // namespace cutpoly
