#pragma once

// Bit-level IEEE 754 utilities shared by every other module: classification,
// sign handling, ulp distance, the fixed-width hex codec used on the wire, and
// per-format parameters (h, t, eps, log2h).

#include <bit>
#include <cfloat>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ccbench/error.hpp"

// binary128 is only advertised when `long double` *is* IEEE binary128 in
// hardware-or-ABI terms (aarch64/ppc64le-ieee128/s390x Linux). x86 __float128
// is a software library and is deliberately not used.
#if defined(__LDBL_MANT_DIG__) && __LDBL_MANT_DIG__ == 113 && defined(__LDBL_MAX_EXP__) && \
    __LDBL_MAX_EXP__ == 16384 && defined(__SIZEOF_INT128__)
#define CCBENCH_HAS_BINARY128 1
#else
#define CCBENCH_HAS_BINARY128 0
#endif

namespace ccbench {

enum class Precision { binary32, binary64, binary128 };

#if CCBENCH_HAS_BINARY128
using binary128_t = long double;
#endif

enum class FloatClass {
    nan,
    pos_inf,
    neg_inf,
    pos_normal,
    neg_normal,
    pos_subnormal,
    neg_subnormal,
    pos_zero,
    neg_zero,
};

template <class T>
struct FormatTraits;

template <>
struct FormatTraits<float> {
    using Bits = std::uint32_t;
    static constexpr Precision precision = Precision::binary32;
    static constexpr int hex_digits = 8;
};

template <>
struct FormatTraits<double> {
    using Bits = std::uint64_t;
    static constexpr Precision precision = Precision::binary64;
    static constexpr int hex_digits = 16;
};

#if CCBENCH_HAS_BINARY128
template <>
struct FormatTraits<binary128_t> {
    using Bits = unsigned __int128;
    static constexpr Precision precision = Precision::binary128;
    static constexpr int hex_digits = 32;
};
#endif

/// A floating type whose storage is exactly one IEEE binary interchange format.
template <class T>
concept IeeeFloat = std::floating_point<T> && std::numeric_limits<T>::is_iec559 && requires {
    typename FormatTraits<T>::Bits;
} && sizeof(T) == sizeof(typename FormatTraits<T>::Bits);

template <IeeeFloat T>
using BitsOf = typename FormatTraits<T>::Bits;

template <IeeeFloat T>
inline constexpr Precision precision_of = FormatTraits<T>::precision;

std::string_view to_string(Precision p) noexcept;
std::string_view to_string(FloatClass c) noexcept;

/// Parses "binary32" / "binary64" / "binary128". Throws UsageError otherwise.
Precision parse_precision(std::string_view name);

/// True when the build provides native arithmetic for `p`.
bool is_supported(Precision p) noexcept;

/// Throws CapabilityError when `p` is not available.
void require_supported(Precision p);

/// All precisions available on this build, narrowest first.
std::vector<Precision> supported_precisions();

/// Number of hex digits in the wire encoding of `p`.
int hex_width(Precision p) noexcept;

/// Invokes `fn(T{})` with the C++ type for `p`; throws CapabilityError when
/// the precision is not compiled in.
template <class Fn>
decltype(auto) dispatch_precision(Precision p, Fn&& fn) {
    switch (p) {
    case Precision::binary32:
        return fn(float{});
    case Precision::binary64:
        return fn(double{});
    case Precision::binary128:
#if CCBENCH_HAS_BINARY128
        return fn(binary128_t{});
#else
        break;
#endif
    }
    throw CapabilityError("precision " + std::string(to_string(p)) + " is not supported on this platform");
}

template <IeeeFloat T>
constexpr BitsOf<T> to_bits(T v) noexcept {
    return std::bit_cast<BitsOf<T>>(v);
}

template <IeeeFloat T>
constexpr T from_bits(BitsOf<T> bits) noexcept {
    return std::bit_cast<T>(bits);
}

template <IeeeFloat T>
constexpr bool sign_bit(T v) noexcept {
    return (to_bits(v) >> (sizeof(T) * 8 - 1)) != 0;
}

/// Magnitude of `mag`, sign bit of `sgn` (IEEE copySign; NaN signs included).
template <IeeeFloat T>
constexpr T copy_sign(T mag, T sgn) noexcept {
    constexpr BitsOf<T> sign_mask = BitsOf<T>{1} << (sizeof(T) * 8 - 1);
    return from_bits<T>(static_cast<BitsOf<T>>((to_bits(mag) & ~sign_mask) | (to_bits(sgn) & sign_mask)));
}

template <IeeeFloat T>
FloatClass classify(T v) noexcept {
    const bool neg = sign_bit(v);
    switch (std::fpclassify(v)) {
    case FP_NAN:
        return FloatClass::nan;
    case FP_INFINITE:
        return neg ? FloatClass::neg_inf : FloatClass::pos_inf;
    case FP_ZERO:
        return neg ? FloatClass::neg_zero : FloatClass::pos_zero;
    case FP_SUBNORMAL:
        return neg ? FloatClass::neg_subnormal : FloatClass::pos_subnormal;
    default:
        return neg ? FloatClass::neg_normal : FloatClass::pos_normal;
    }
}

/// Sign mirror of a class (NaN maps to itself).
FloatClass mirror(FloatClass c) noexcept;

bool is_subnormal_class(FloatClass c) noexcept;

/// Count of representable steps between `a` and `b`. ±0 are the same point;
/// their sign is checked separately. Throws NanInputError for NaN.
template <IeeeFloat T>
BitsOf<T> ulp_distance(T a, T b) {
    if (std::isnan(a) || std::isnan(b)) {
        throw NanInputError("ulp distance is undefined for NaN");
    }
    using Bits = BitsOf<T>;
    constexpr Bits sign_mask = Bits{1} << (sizeof(T) * 8 - 1);
    const Bits ba = to_bits(a);
    const Bits bb = to_bits(b);
    const Bits ma = ba & ~sign_mask;
    const Bits mb = bb & ~sign_mask;
    if (((ba ^ bb) & sign_mask) != 0) {
        return ma + mb;
    }
    return ma > mb ? ma - mb : mb - ma;
}

/// Lowercase fixed-width hex of the bit pattern, no prefix.
template <IeeeFloat T>
std::string encode_bits(T v) {
    constexpr int width = FormatTraits<T>::hex_digits;
    constexpr char digits[] = "0123456789abcdef";
    std::string out(width, '0');
    BitsOf<T> bits = to_bits(v);
    for (int i = width - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[static_cast<unsigned>(bits & 0xf)];
        bits >>= 4;
    }
    return out;
}

/// Inverse of encode_bits. Rejects wrong widths, uppercase and non-hex text.
template <IeeeFloat T>
T decode_bits(std::string_view hex) {
    constexpr int width = FormatTraits<T>::hex_digits;
    if (hex.size() != static_cast<std::size_t>(width)) {
        throw ParseError("expected " + std::to_string(width) + " hex digits, got '" + std::string(hex) + "'");
    }
    BitsOf<T> bits = 0;
    for (char c : hex) {
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = static_cast<unsigned>(c - 'a' + 10);
        } else {
            throw ParseError("invalid hex digit in '" + std::string(hex) + "'");
        }
        bits = static_cast<BitsOf<T>>((bits << 4) | nibble);
    }
    return from_bits<T>(bits);
}

template <IeeeFloat T>
struct FormatParams {
    T h;      ///< largest finite value (HUGE)
    T t;      ///< smallest positive normal (TINY)
    T eps;    ///< 2^(1-p)
    T log2h;  ///< int(log(2) + log(h)) evaluated in the format itself
};

template <IeeeFloat T>
FormatParams<T> format_params() {
    using L = std::numeric_limits<T>;
    const T h = L::max();
    return {h, L::min(), L::epsilon(), std::trunc(std::log(T(2)) + std::log(h))};
}

}  // namespace ccbench
