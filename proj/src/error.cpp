#include "boxfactor/error.hpp"

namespace boxfactor {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::SelfPairInTwoEdges: return "SelfPairInTwoEdges";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyFactorList: return "EmptyFactorList";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::NonSquareInput: return "NonSquareInput";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::Trivial: return "Trivial";
    case ErrorCode::RootLooped: return "RootLooped";
    case ErrorCode::NothingToMerge: return "NothingToMerge";
    case ErrorCode::NoUnloopedVertex: return "NoUnloopedVertex";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateRecord: return "DuplicateRecord";
    case ErrorCode::SelfEdgeViaE: return "SelfEdgeViaE";
    }
    return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& detail, std::size_t line) {
    std::string msg(error_name(code));
    if (line != 0) {
        msg += " (line " + std::to_string(line) + ")";
    }
    if (!detail.empty()) {
        msg += ": " + detail;
    }
    return msg;
}

} // namespace

Error::Error(ErrorCode code, const std::string& detail, std::size_t line)
    : std::runtime_error(format_message(code, detail, line)), code_(code), line_(line) {}

} // namespace boxfactor
