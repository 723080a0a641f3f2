#include "ccbench/refmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ccbench {

namespace {

template <IeeeFloat T>
void require_finite(T x, T y, const char* what) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw NanInputError(std::string(what) + ": NaN or infinite component");
    }
}

template <IeeeFloat T>
void require_finite(SignedComplex<T> z, const char* what) {
    require_finite(z.re, z.im, what);
}

// Beyond this modulus the generic formulas could overflow when squaring;
// the asymptotic forms take over.
template <IeeeFloat T>
T large_threshold() {
    return std::sqrt(std::numeric_limits<T>::max()) / 4;
}

template <IeeeFloat T>
bool is_large(SignedComplex<T> z) {
    return std::max(std::fabs(z.re), std::fabs(z.im)) > large_threshold<T>();
}

template <IeeeFloat T>
bool is_zero(T v) {
    return v == 0;
}

// 1 / z by Smith's method.
template <IeeeFloat T>
SignedComplex<T> reciprocal(SignedComplex<T> z) {
    if (std::fabs(z.re) >= std::fabs(z.im)) {
        const T r = z.im / z.re;
        const T d = z.re + z.im * r;
        return {1 / d, -r / d};
    }
    const T r = z.re / z.im;
    const T d = z.im + z.re * r;
    return {r / d, -1 / d};
}

// asinh z ~ log(2z) for huge |z|, made odd explicitly.
template <IeeeFloat T>
SignedComplex<T> asinh_large(SignedComplex<T> z) {
    if (sign_bit(z.re)) {
        return negate(asinh_large(negate(z)));
    }
    return {log_modulus(z.re, z.im) + std::numbers::ln2_v<T>, principal_arg(z)};
}

// acosh z ~ log(2z) for huge |z|.
template <IeeeFloat T>
SignedComplex<T> acosh_large(SignedComplex<T> z) {
    return {log_modulus(z.re, z.im) + std::numbers::ln2_v<T>, principal_arg(z)};
}

}  // namespace

template <IeeeFloat T>
T log_modulus(T x, T y) {
    require_finite(x, y, "log_modulus");
    const T ax = std::fabs(x);
    const T ay = std::fabs(y);
    const T m = std::max(ax, ay);
    const T s = std::min(ax, ay);
    if (m == 0) {
        return -std::numeric_limits<T>::infinity();
    }
    if (m >= T(0.5) && m <= T(2)) {
        return std::log1p((m - 1) * (m + 1) + s * s) / 2;
    }
    const T r = s / m;
    return std::log(m) + std::log1p(r * r) / 2;
}

template <IeeeFloat T>
T helper_b(T a) {
    if (!(a >= 1) || !std::isfinite(a)) {
        throw DomainError("helper_b: argument must be finite and >= 1");
    }
    // (a-1)/a is exact-ish near 1, where 1 - 1/a would cancel.
    const T u = ((a - 1) / a) * ((a + 1) / a);
    return std::log(a) + std::log1p(std::sqrt(u));
}

template <IeeeFloat T>
T helper_c(T a) {
    if (!(a >= 1) || !std::isfinite(a)) {
        throw DomainError("helper_c: argument must be finite and >= 1");
    }
    return std::log1p(2 / (a - 1)) / 2;
}

template <IeeeFloat T>
T helper_d(T a) {
    if (!(a >= -1 && a <= 1)) {
        throw DomainError("helper_d: argument must lie in [-1, 1]");
    }
    return 2 * std::atan2(std::sqrt(1 - a), std::sqrt(1 + a));
}

template <IeeeFloat T>
SignedComplex<T> csqrt(SignedComplex<T> z) {
    require_finite(z, "csqrt");
    const T x = z.re;
    const T y = z.im;
    if (is_zero(y)) {
        if (x <= 0) {
            return {T(0), copy_sign(std::sqrt(-x), y)};
        }
        return {std::sqrt(x), y};
    }

    using L = std::numeric_limits<T>;
    T sx = x;
    T sy = y;
    int scale = 0;  // result is multiplied by 2^scale
    const T m = std::max(std::fabs(x), std::fabs(y));
    if (m > L::max() / 4) {
        sx /= 4;
        sy /= 4;
        scale = 1;
    } else if (m < 4 * L::min()) {
        sx = std::ldexp(sx, 2 * L::digits);
        sy = std::ldexp(sy, 2 * L::digits);
        scale = -L::digits;
    }
    const T rho = std::sqrt((std::fabs(sx) + std::hypot(sx, sy)) / 2);
    T re;
    T im;
    if (sx >= 0) {
        re = rho;
        im = sy / (2 * rho);
    } else {
        re = std::fabs(sy) / (2 * rho);
        im = copy_sign(rho, sy);
    }
    return {std::ldexp(re, scale), std::ldexp(im, scale)};
}

template <IeeeFloat T>
SignedComplex<T> clog(SignedComplex<T> z) {
    require_finite(z, "clog");
    constexpr T pi = std::numbers::pi_v<T>;
    if (is_zero(z.re) && is_zero(z.im)) {
        return {-std::numeric_limits<T>::infinity(), copy_sign(pi, z.im)};
    }
    if (is_zero(z.im) && z.re < 0) {
        return {std::log(-z.re), copy_sign(pi, z.im)};
    }
    return {log_modulus(z.re, z.im), principal_arg(z)};
}

template <IeeeFloat T>
SignedComplex<T> casin(SignedComplex<T> z) {
    require_finite(z, "casin");
    const T x = z.re;
    const T y = z.im;
    if (is_zero(y) && std::fabs(x) >= 1) {
        return {copy_sign(std::numbers::pi_v<T> / 2, x), copy_sign(helper_b(std::fabs(x)), y)};
    }
    if (is_large(z)) {
        // asin z = -i asinh(iz)
        const SignedComplex<T> w = asinh_large(SignedComplex<T>{-y, x});
        return {w.im, -w.re};
    }
    const SignedComplex<T> xi = csqrt(SignedComplex<T>{1 - x, -y});
    const SignedComplex<T> eta = csqrt(SignedComplex<T>{1 + x, y});
    return {std::atan2(x, xi.re * eta.re - xi.im * eta.im), std::asinh(xi.re * eta.im - xi.im * eta.re)};
}

template <IeeeFloat T>
SignedComplex<T> cacos(SignedComplex<T> z) {
    require_finite(z, "cacos");
    const T x = z.re;
    const T y = z.im;
    if (is_zero(y) && x <= -1) {
        return {std::numbers::pi_v<T>, copy_sign(helper_b(-x), -y)};
    }
    if (is_zero(y) && x >= 1) {
        return {T(0), copy_sign(helper_b(x), -y)};
    }
    if (is_large(z)) {
        const SignedComplex<T> w = acosh_large(z);
        if (!sign_bit(y)) {
            return {w.im, -w.re};
        }
        return {-w.im, w.re};
    }
    const SignedComplex<T> xi = csqrt(SignedComplex<T>{1 - x, -y});
    const SignedComplex<T> eta = csqrt(SignedComplex<T>{1 + x, y});
    return {2 * std::atan2(xi.re, eta.re), std::asinh(eta.re * xi.im - eta.im * xi.re)};
}

template <IeeeFloat T>
SignedComplex<T> cacosh(SignedComplex<T> z) {
    require_finite(z, "cacosh");
    const T x = z.re;
    const T y = z.im;
    if (is_zero(y) && x <= 1) {
        if (x <= -1) {
            return {helper_b(-x), copy_sign(std::numbers::pi_v<T>, y)};
        }
        return {T(0), copy_sign(helper_d(x), y)};
    }
    if (is_large(z)) {
        return acosh_large(z);
    }
    const SignedComplex<T> xi = csqrt(SignedComplex<T>{x - 1, y});
    const SignedComplex<T> eta = csqrt(SignedComplex<T>{x + 1, y});
    return {std::asinh(xi.re * eta.re + xi.im * eta.im), 2 * std::atan2(xi.im, eta.re)};
}

template <IeeeFloat T>
SignedComplex<T> casinh(SignedComplex<T> z) {
    require_finite(z, "casinh");
    const T x = z.re;
    const T y = z.im;
    if (is_zero(x) && std::fabs(y) >= 1) {
        return {copy_sign(helper_b(std::fabs(y)), x), copy_sign(std::numbers::pi_v<T> / 2, y)};
    }
    // asinh z = -i asin(iz)
    const SignedComplex<T> w = casin(SignedComplex<T>{-y, x});
    return {w.im, -w.re};
}

template <IeeeFloat T>
SignedComplex<T> catanh(SignedComplex<T> z) {
    require_finite(z, "catanh");
    const T x = z.re;
    const T y = z.im;
    constexpr T half_pi = std::numbers::pi_v<T> / 2;
    if (is_zero(y) && std::fabs(x) >= 1) {
        return {copy_sign(helper_c(std::fabs(x)), x), copy_sign(half_pi, y)};
    }
    if (sign_bit(x)) {
        return negate(catanh(negate(z)));
    }
    if (is_large(z)) {
        // atanh z ~ 1/z + i(pi/2) sign(y)
        const T ax = std::fabs(x);
        const T ay = std::fabs(y);
        const T m = std::max(ax, ay);
        const T r = std::min(ax, ay) / m;
        return {((x / m) / (1 + r * r)) / m, copy_sign(half_pi, y)};
    }
    const T hn = std::hypot(1 + x, y);
    const T hd = std::hypot(1 - x, y);
    T re;
    if (hd < hn / 2) {
        re = (std::log(hn) - std::log(hd)) / 2;
    } else {
        re = std::log1p(4 * x / ((1 - x) * (1 - x) + y * y)) / 4;
    }
    const T im = std::atan2(2 * y, (1 - x) * (1 + x) - y * y) / 2;
    return {re, im};
}

template <IeeeFloat T>
SignedComplex<T> catan(SignedComplex<T> z) {
    require_finite(z, "catan");
    const T x = z.re;
    const T y = z.im;
    if (is_zero(x) && std::fabs(y) >= 1) {
        return {copy_sign(std::numbers::pi_v<T> / 2, x), copy_sign(helper_c(std::fabs(y)), y)};
    }
    // atan z = -i atanh(iz)
    const SignedComplex<T> w = catanh(SignedComplex<T>{-y, x});
    return {w.im, -w.re};
}

template <IeeeFloat T>
SignedComplex<T> cexp(SignedComplex<T> z) {
    if (std::isnan(z.re) || std::isnan(z.im) || !std::isfinite(z.im) || z.re == std::numeric_limits<T>::infinity()) {
        throw NanInputError("cexp: unsupported special input");
    }
    const T e = std::exp(z.re);
    return {e * std::cos(z.im), e * std::sin(z.im)};
}

template <IeeeFloat T>
SignedComplex<T> ctanh(SignedComplex<T> z) {
    require_finite(z, "ctanh");
    using L = std::numeric_limits<T>;
    const T x = z.re;
    const T y = z.im;
    const T t = std::tan(y);
    const T beta = 1 + t * t;
    if (std::fabs(x) > (L::digits + 2) * std::numbers::ln2_v<T> / 2) {
        return {copy_sign(T(1), x), 4 * t * std::exp(-2 * std::fabs(x)) / beta};
    }
    const T s = std::sinh(x);
    const T rho = std::sqrt(1 + s * s);
    const T k = 1 / (1 + beta * s * s);
    return {beta * rho * s * k, t * k};
}

template <IeeeFloat T>
SignedComplex<T> ctan(SignedComplex<T> z) {
    // tan z = -i tanh(iz)
    const SignedComplex<T> w = ctanh(SignedComplex<T>{-z.im, z.re});
    return {w.im, -w.re};
}

template <IeeeFloat T>
SignedComplex<T> joukowski(SignedComplex<T> w) {
    require_finite(w, "joukowski");
    if (is_zero(w.re) && is_zero(w.im)) {
        throw PoleError("joukowski: pole at w = 0");
    }
    const SignedComplex<T> inv = reciprocal(w);
    return {w.re + inv.re, w.im + inv.im};
}

template <IeeeFloat T>
SignedComplex<T> joukowski_inverse(SignedComplex<T> z) {
    require_finite(z, "joukowski_inverse");
    const T x = z.re;
    const T y = z.im;
    if (is_large(z)) {
        const SignedComplex<T> inv = reciprocal(z);
        return {x - inv.re, y - inv.im};
    }
    // z^2 - 4 componentwise, so y = ±0 reaches the square root with its sign.
    const SignedComplex<T> s = csqrt(SignedComplex<T>{(x - 2) * (x + 2) - y * y, 2 * x * y});
    const T sg = copy_sign(T(1), x);
    return {(x + sg * s.re) / 2, (y + sg * s.im) / 2};
}

template <IeeeFloat T>
SignedComplex<T> cross_map(SignedComplex<T> z) {
    require_finite(z, "cross_map");
    const T x = z.re;
    const T y = z.im;
    const SignedComplex<T> zeta{(x - y) * (x + y) / 4, x * y / 2};
    if (is_zero(zeta.re) && is_zero(zeta.im)) {
        throw PoleError("cross_map: tan(acos 0) is a pole");
    }
    return ctan(cacos(zeta));
}

#define CCBENCH_INSTANTIATE_REFMATH(T)                               \
    template T log_modulus<T>(T, T);                                 \
    template T helper_b<T>(T);                                       \
    template T helper_c<T>(T);                                       \
    template T helper_d<T>(T);                                       \
    template SignedComplex<T> clog<T>(SignedComplex<T>);             \
    template SignedComplex<T> csqrt<T>(SignedComplex<T>);            \
    template SignedComplex<T> casin<T>(SignedComplex<T>);            \
    template SignedComplex<T> cacos<T>(SignedComplex<T>);            \
    template SignedComplex<T> catan<T>(SignedComplex<T>);            \
    template SignedComplex<T> casinh<T>(SignedComplex<T>);           \
    template SignedComplex<T> cacosh<T>(SignedComplex<T>);           \
    template SignedComplex<T> catanh<T>(SignedComplex<T>);           \
    template SignedComplex<T> cexp<T>(SignedComplex<T>);             \
    template SignedComplex<T> ctan<T>(SignedComplex<T>);             \
    template SignedComplex<T> ctanh<T>(SignedComplex<T>);            \
    template SignedComplex<T> joukowski<T>(SignedComplex<T>);        \
    template SignedComplex<T> joukowski_inverse<T>(SignedComplex<T>); \
    template SignedComplex<T> cross_map<T>(SignedComplex<T>);

CCBENCH_INSTANTIATE_REFMATH(float)
CCBENCH_INSTANTIATE_REFMATH(double)
#if CCBENCH_HAS_BINARY128
CCBENCH_INSTANTIATE_REFMATH(binary128_t)
#endif

#undef CCBENCH_INSTANTIATE_REFMATH

}  // namespace ccbench
