#pragma once

// Reference complex elementary functions. Points on a branch cut are routed
// through closed forms so the side of the cut (the sign of the zero component)
// selects the value; everything else uses Kahan-style formulas with
// magnitude guards. Inputs with NaN or infinite components throw NanInputError.

#include "ccbench/argument.hpp"

namespace ccbench {

/// log|x + iy| without overflow or premature underflow.
template <IeeeFloat T>
T log_modulus(T x, T y);

/// b(a) = log(a + sqrt(a^2 - 1)), a >= 1.
template <IeeeFloat T>
T helper_b(T a);

/// c(a) = log((a + 1) / (a - 1)) / 2, a >= 1. c(1) is +inf.
template <IeeeFloat T>
T helper_c(T a);

/// d(a) = 2 atan(sqrt((1 - a) / (1 + a))), -1 <= a <= 1.
template <IeeeFloat T>
T helper_d(T a);

template <IeeeFloat T>
SignedComplex<T> clog(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> csqrt(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> casin(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> cacos(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> catan(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> casinh(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> cacosh(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> catanh(SignedComplex<T> z);

/// exp(x)(cos y + i sin y). Accepts x = -inf, which the log/exp identity needs.
template <IeeeFloat T>
SignedComplex<T> cexp(SignedComplex<T> z);

template <IeeeFloat T>
SignedComplex<T> ctan(SignedComplex<T> z);
template <IeeeFloat T>
SignedComplex<T> ctanh(SignedComplex<T> z);

/// z = w + 1/w. Throws PoleError at w = 0.
template <IeeeFloat T>
SignedComplex<T> joukowski(SignedComplex<T> w);

/// w = (z + copysign(1, Re z) sqrt(z^2 - 4)) / 2, the root with |w| >= 1.
/// The cut [-2, 2] lands on the unit circle, upper half for y = +0.
template <IeeeFloat T>
SignedComplex<T> joukowski_inverse(SignedComplex<T> z);

/// w = tan(acos(z^2 / 4)). Throws PoleError where z^2 / 4 is exactly zero.
template <IeeeFloat T>
SignedComplex<T> cross_map(SignedComplex<T> z);

}  // namespace ccbench
