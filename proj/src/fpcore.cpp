#include "ccbench/fpcore.hpp"

namespace ccbench {

std::string_view to_string(Precision p) noexcept {
    switch (p) {
    case Precision::binary32:
        return "binary32";
    case Precision::binary64:
        return "binary64";
    case Precision::binary128:
        return "binary128";
    }
    return "?";
}

std::string_view to_string(FloatClass c) noexcept {
    switch (c) {
    case FloatClass::nan:
        return "NaN";
    case FloatClass::pos_inf:
        return "PosInf";
    case FloatClass::neg_inf:
        return "NegInf";
    case FloatClass::pos_normal:
        return "PosNormal";
    case FloatClass::neg_normal:
        return "NegNormal";
    case FloatClass::pos_subnormal:
        return "PosSubnormal";
    case FloatClass::neg_subnormal:
        return "NegSubnormal";
    case FloatClass::pos_zero:
        return "PosZero";
    case FloatClass::neg_zero:
        return "NegZero";
    }
    return "?";
}

Precision parse_precision(std::string_view name) {
    if (name == "binary32") {
        return Precision::binary32;
    }
    if (name == "binary64") {
        return Precision::binary64;
    }
    if (name == "binary128") {
        return Precision::binary128;
    }
    throw UsageError("unknown precision '" + std::string(name) + "'");
}

bool is_supported(Precision p) noexcept {
    return p != Precision::binary128 || CCBENCH_HAS_BINARY128;
}

void require_supported(Precision p) {
    if (!is_supported(p)) {
        throw CapabilityError("precision " + std::string(to_string(p)) + " is not supported on this platform");
    }
}

std::vector<Precision> supported_precisions() {
    std::vector<Precision> out{Precision::binary32, Precision::binary64};
    if (CCBENCH_HAS_BINARY128) {
        out.push_back(Precision::binary128);
    }
    return out;
}

int hex_width(Precision p) noexcept {
    switch (p) {
    case Precision::binary32:
        return 8;
    case Precision::binary64:
        return 16;
    case Precision::binary128:
        return 32;
    }
    return 0;
}

FloatClass mirror(FloatClass c) noexcept {
    switch (c) {
    case FloatClass::nan:
        return FloatClass::nan;
    case FloatClass::pos_inf:
        return FloatClass::neg_inf;
    case FloatClass::neg_inf:
        return FloatClass::pos_inf;
    case FloatClass::pos_normal:
        return FloatClass::neg_normal;
    case FloatClass::neg_normal:
        return FloatClass::pos_normal;
    case FloatClass::pos_subnormal:
        return FloatClass::neg_subnormal;
    case FloatClass::neg_subnormal:
        return FloatClass::pos_subnormal;
    case FloatClass::pos_zero:
        return FloatClass::neg_zero;
    case FloatClass::neg_zero:
        return FloatClass::pos_zero;
    }
    return c;
}

bool is_subnormal_class(FloatClass c) noexcept {
    return c == FloatClass::pos_subnormal || c == FloatClass::neg_subnormal;
}

}  // namespace ccbench
