#pragma once

#include <stdexcept>
#include <string>

namespace fracgauss {

enum class ErrorCode {
    kInvalidArgument,
    kPole,
    kOverflow,
    kRank,
    kConvergence,
    kDegenerate,
    kDomain,
    kQuadrature,
    kNegativeResult,
    kIo,
};

/// Exception carrying an ErrorCode; the C API maps codes to fg_status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

}  // namespace fracgauss
