#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sevlab {

enum class ErrorCode {
    ClosureCapExceeded,
    DegreeMismatch,
    ZeroSubstitution,
    UnsupportedType,
    NotDominant,
    NonIntegerResult,
    SingularPoint,
    BudgetExceeded,
    UnsupportedPair,
    TopNotFound,
    TopNotUnique,
    OutOfRange,
    TooLarge,
    InconsistentSystem,
    NonIntegralSolution,
    NotPure,
    NonIntegralLinkCount,
    NonIntegral,
    NotAnAutomorphism,
    UnknownDataset,
    NotHighestWeight,
    DimensionMismatch,
    MultiplicityNotFree,
    SelectionAmbiguous,
    SelectionMissing,
    UnsupportedCase,
    ParseError,
    IOError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sevlab
