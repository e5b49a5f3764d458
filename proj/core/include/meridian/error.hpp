#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace meridian {

enum class ErrorCode {
    Precondition,  // invalid argument or violated precondition
    Singular,      // collision or antipodal pair, force law undefined
    Range,         // outside the family's existence window
    AZero,         // amplitude A vanishes; use resolve_a_zero
    Internal,      // numerical inconsistency that should be unreachable
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace meridian
