#pragma once

#include <stdexcept>
#include <string>

namespace polymaj {

enum class Errc {
    ParseError,
    LengthMismatch,
    DegreeTooLow,
    NoSignChange,
    EpsOutOfRange,
    IndexError,
    SharedRoots,
    NonSimpleRoots,
    DegenerateEmpty,
    NoCommonInterlacer,
    BracketFailure,
    TOutOfOpenRange,
    GridTooSmall,
    GridExhausted,
    SpecInfeasible,
    SpecInvalid,
    TrialsOutOfRange,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ParseError: return "ParseError";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::DegreeTooLow: return "DegreeTooLow";
        case Errc::NoSignChange: return "NoSignChange";
        case Errc::EpsOutOfRange: return "EpsOutOfRange";
        case Errc::IndexError: return "IndexError";
        case Errc::SharedRoots: return "SharedRoots";
        case Errc::NonSimpleRoots: return "NonSimpleRoots";
        case Errc::DegenerateEmpty: return "DegenerateEmpty";
        case Errc::NoCommonInterlacer: return "NoCommonInterlacer";
        case Errc::BracketFailure: return "BracketFailure";
        case Errc::TOutOfOpenRange: return "TOutOfOpenRange";
        case Errc::GridTooSmall: return "GridTooSmall";
        case Errc::GridExhausted: return "GridExhausted";
        case Errc::SpecInfeasible: return "SpecInfeasible";
        case Errc::SpecInvalid: return "SpecInvalid";
        case Errc::TrialsOutOfRange: return "TrialsOutOfRange";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace polymaj
