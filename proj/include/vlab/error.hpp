#ifndef VLAB_ERROR_HPP
#define VLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vlab {

enum class ErrorCode {
    DivisionByZero,
    RingMismatch,
    FieldMismatch,
    OrderUnsuitable,
    NotZeroDimensional,
    DegreeCapExceeded,
    ShapePositionFailure,
    ExtensionCapExceeded,
    PointNotOnScheme,
    DegenerateConfiguration,
    DegenerateWeb,
    ConstraintInfeasible,
    DependentPoints,
    RankDeficient,
    RankTooLow,
    DegreeMismatch,
    UncoveredMonomial,
    RetriesExhausted,
    IrreducibleSearchFailed,
    InvalidArgument,
    ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace vlab

#endif
