#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boxfactor {

enum class ErrorCode {
    IdOutOfRange,
    SelfPairInTwoEdges,
    DuplicateEdge,
    EmptyFactorList,
    EmptyFactor,
    NonSquareInput,
    AsymmetricMatrix,
    IndexOutOfRange,
    Disconnected,
    SizeLimitExceeded,
    HasLoops,
    Trivial,
    RootLooped,
    NothingToMerge,
    NoUnloopedVertex,
    SyntaxError,
    DuplicateRecord,
    SelfEdgeViaE,
};

std::string_view error_name(ErrorCode code) noexcept;

// Parse errors (SyntaxError, DuplicateRecord, SelfEdgeViaE, and IdOutOfRange
// raised while reading LGR text) carry the offending line number.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail, std::size_t line = 0);

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::size_t line_;
};

} // namespace boxfactor
