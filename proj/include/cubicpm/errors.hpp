#pragma once

#include <stdexcept>
#include <string>

namespace cubicpm {

enum class ErrorKind {
    LoopEdge,
    NotCubic,
    BadIndex,
    EmptySide,
    Disconnected,
    BadParams,
    SizeLimit,
    NotPerfect,
    CapExceeded,
    Infeasible,
    NotThreeCut,
    BadCutSize,
    NotPruned,
    PreconditionFailed,
    NotFourCut,
    HypothesisFailed,
    NotAPath,
    UsesNewEdge,
    EmptyPreimage,
    InductionStuck,
    NoM3,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::NotCubic: return "NotCubic";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::EmptySide: return "EmptySide";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::NotPerfect: return "NotPerfect";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::NotThreeCut: return "NotThreeCut";
        case ErrorKind::BadCutSize: return "BadCutSize";
        case ErrorKind::NotPruned: return "NotPruned";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotFourCut: return "NotFourCut";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::NotAPath: return "NotAPath";
        case ErrorKind::UsesNewEdge: return "UsesNewEdge";
        case ErrorKind::EmptyPreimage: return "EmptyPreimage";
        case ErrorKind::InductionStuck: return "InductionStuck";
        case ErrorKind::NoM3: return "NoM3";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

}  // namespace cubicpm
