#pragma once

#include <array>
#include <string_view>

#include "ccbench/refmath.hpp"

namespace ccbench {

/// The eight functions under test. Lowercase names are the wire spelling.
enum class FunctionId { log, sqrt, asin, acos, atan, asinh, acosh, atanh };

inline constexpr std::array<FunctionId, 8> all_functions{
    FunctionId::log,  FunctionId::sqrt,  FunctionId::asin,  FunctionId::acos,
    FunctionId::atan, FunctionId::asinh, FunctionId::acosh, FunctionId::atanh,
};

std::string_view to_string(FunctionId fn) noexcept;

/// Throws UsageError for names outside the closed set.
FunctionId parse_function(std::string_view name);

/// Dispatches to the matching refmath function.
template <IeeeFloat T>
SignedComplex<T> builtin_eval(FunctionId fn, SignedComplex<T> z) {
    switch (fn) {
    case FunctionId::log:
        return clog(z);
    case FunctionId::sqrt:
        return csqrt(z);
    case FunctionId::asin:
        return casin(z);
    case FunctionId::acos:
        return cacos(z);
    case FunctionId::atan:
        return catan(z);
    case FunctionId::asinh:
        return casinh(z);
    case FunctionId::acosh:
        return cacosh(z);
    case FunctionId::atanh:
        return catanh(z);
    }
    throw UsageError("unknown function");
}

}  // namespace ccbench
