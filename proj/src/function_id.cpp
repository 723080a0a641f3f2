#include "ccbench/function_id.hpp"

#include <string>

namespace ccbench {

std::string_view to_string(FunctionId fn) noexcept {
    switch (fn) {
    case FunctionId::log:
        return "log";
    case FunctionId::sqrt:
        return "sqrt";
    case FunctionId::asin:
        return "asin";
    case FunctionId::acos:
        return "acos";
    case FunctionId::atan:
        return "atan";
    case FunctionId::asinh:
        return "asinh";
    case FunctionId::acosh:
        return "acosh";
    case FunctionId::atanh:
        return "atanh";
    }
    return "?";
}

FunctionId parse_function(std::string_view name) {
    for (FunctionId fn : all_functions) {
        if (to_string(fn) == name) {
            return fn;
        }
    }
    throw UsageError("unknown function '" + std::string(name) + "'");
}

}  // namespace ccbench
