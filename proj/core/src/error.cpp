#include "meridian/error.hpp"

namespace meridian {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Precondition: return "PRECONDITION";
        case ErrorCode::Singular: return "SINGULAR";
        case ErrorCode::Range: return "RANGE";
        case ErrorCode::AZero: return "AZERO";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "INTERNAL";
}

}  // namespace meridian
