#pragma once

// Complex values with sign-preserving components and the principal argument.

#include <cmath>
#include <numbers>

#include "ccbench/fpcore.hpp"

namespace ccbench {

template <IeeeFloat T>
struct SignedComplex {
    T re{};
    T im{};
};

template <IeeeFloat T>
constexpr SignedComplex<T> conj(SignedComplex<T> z) noexcept {
    return {z.re, -z.im};
}

template <IeeeFloat T>
constexpr SignedComplex<T> negate(SignedComplex<T> z) noexcept {
    return {-z.re, -z.im};
}

/// Bitwise equality of both components (distinguishes ±0, compares NaN payloads).
template <IeeeFloat T>
constexpr bool identical(SignedComplex<T> a, SignedComplex<T> b) noexcept {
    return to_bits(a.re) == to_bits(b.re) && to_bits(a.im) == to_bits(b.im);
}

/// arctan|y/x| in [0, π/2]. ω(±0, ±0) is 0.
template <IeeeFloat T>
T omega(T x, T y) {
    if (std::isnan(x) || std::isnan(y)) {
        throw NanInputError("omega: NaN component");
    }
    return std::atan2(std::fabs(y), std::fabs(x));
}

/// Arg z with the quadrant chosen from the sign bits of x and y, so x = -0
/// lands in the 2nd or 3rd quadrant.
template <IeeeFloat T>
T principal_arg(SignedComplex<T> z) {
    const T w = omega(z.re, z.im);
    constexpr T pi = std::numbers::pi_v<T>;
    const bool xneg = sign_bit(z.re);
    const bool yneg = sign_bit(z.im);
    if (!xneg) {
        return yneg ? -w : w;
    }
    return yneg ? -pi + w : pi - w;
}

}  // namespace ccbench
