#include "ccbench/suite.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>

namespace ccbench {

namespace {

constexpr std::array<char, failure_count> failure_chars{'x', 'd', 'm', 'n', 'o', 'p', 's', 'z'};

SignRule sign_of(bool negative) {
    return negative ? SignRule::negative : SignRule::positive;
}

template <IeeeFloat T>
ComponentExpectation<T> exact(T magnitude, SignRule sign) {
    return {ExpectKind::exact_signed, sign, magnitude, T(0), 4};
}

template <IeeeFloat T>
ComponentExpectation<T> zero(SignRule sign) {
    return {ExpectKind::signed_zero, sign, T(0), T(0), 0};
}

template <IeeeFloat T>
ComponentExpectation<T> infinite(SignRule sign) {
    return {ExpectKind::signed_inf, sign, T(0), T(0), 0};
}

template <IeeeFloat T>
ComponentExpectation<T> lower_bounded(T bound, SignRule sign) {
    return {ExpectKind::lower_bounded_finite, sign, T(0), bound, 0};
}

template <IeeeFloat T>
ComponentExpectation<T> subnormal(T magnitude, SignRule sign) {
    return {ExpectKind::subnormal_expected, sign, magnitude, T(0), 4};
}

template <IeeeFloat T>
ComponentExpectation<T> any_finite() {
    return {ExpectKind::any_finite, SignRule::immaterial, T(0), T(0), 0};
}

// One coordinate of a test point: its printed token and value.
template <IeeeFloat T>
struct Coord {
    std::string token;
    T value;
};

// Named magnitudes used by the suite: 0, 1, 1+e, t, h.
enum class Mag { zero, one, one_eps, tiny, huge };

template <IeeeFloat T>
T magnitude(Mag m) {
    const FormatParams<T> p = format_params<T>();
    switch (m) {
    case Mag::zero:
        return T(0);
    case Mag::one:
        return T(1);
    case Mag::one_eps:
        return 1 + p.eps;
    case Mag::tiny:
        return p.t;
    case Mag::huge:
        return p.h;
    }
    return T(0);
}

std::string mag_token(Mag m) {
    switch (m) {
    case Mag::zero:
        return "0";
    case Mag::one:
        return "1";
    case Mag::one_eps:
        return "(1+e)";
    case Mag::tiny:
        return "t";
    case Mag::huge:
        return "h";
    }
    return "?";
}

template <IeeeFloat T>
Coord<T> coord(bool negative, Mag m) {
    const T v = magnitude<T>(m);
    return {std::string(negative ? "-" : "+") + mag_token(m), negative ? -v : v};
}

template <IeeeFloat T>
TestCase<T> make_case(FunctionId fn, const Coord<T>& re, const Coord<T>& im, ComponentExpectation<T> ere,
                      ComponentExpectation<T> eim) {
    TestCase<T> tc;
    tc.id = std::string(to_string(fn)) + "/" + re.token + (im.token[0] == '-' ? "-i" : "+i") + im.token.substr(1);
    tc.function = fn;
    tc.input = {re.value, im.value};
    tc.expect_re = ere;
    tc.expect_im = eim;
    return tc;
}

// Points on a real-axis cut: (sign of x, magnitude of x, sign of y).
struct RealPoint {
    bool xneg;
    Mag mag;
    bool yneg;
};

// Points on an imaginary-axis cut: (sign of x, sign of y, magnitude of y).
struct ImagPoint {
    bool xneg;
    bool yneg;
    Mag mag;
};

constexpr std::array<RealPoint, 6> log_points{{
    {true, Mag::huge, false},
    {true, Mag::one, false},
    {true, Mag::tiny, false},
    {true, Mag::tiny, true},
    {true, Mag::one, true},
    {true, Mag::huge, true},
}};

constexpr std::array<RealPoint, 8> sqrt_points{{
    {true, Mag::huge, false},
    {true, Mag::one, false},
    {true, Mag::tiny, false},
    {false, Mag::zero, false},
    {false, Mag::zero, true},
    {true, Mag::tiny, true},
    {true, Mag::one, true},
    {true, Mag::huge, true},
}};

constexpr std::array<RealPoint, 8> asin_points{{
    {true, Mag::huge, false},
    {true, Mag::one, false},
    {true, Mag::one, true},
    {true, Mag::huge, true},
    {false, Mag::huge, false},
    {false, Mag::one, false},
    {false, Mag::one, true},
    {false, Mag::huge, true},
}};

constexpr std::array<ImagPoint, 12> atan_points{{
    {false, false, Mag::huge},
    {false, false, Mag::one_eps},
    {false, false, Mag::one},
    {true, false, Mag::one},
    {true, false, Mag::one_eps},
    {true, false, Mag::huge},
    {true, true, Mag::huge},
    {true, true, Mag::one_eps},
    {true, true, Mag::one},
    {false, true, Mag::one},
    {false, true, Mag::one_eps},
    {false, true, Mag::huge},
}};

constexpr std::array<ImagPoint, 8> asinh_points{{
    {false, false, Mag::huge},
    {false, false, Mag::one},
    {true, false, Mag::one},
    {true, false, Mag::huge},
    {false, true, Mag::huge},
    {false, true, Mag::one},
    {true, true, Mag::one},
    {true, true, Mag::huge},
}};

constexpr std::array<RealPoint, 8> acosh_points{{
    {true, Mag::huge, false},
    {true, Mag::one, false},
    {false, Mag::zero, false},
    {false, Mag::one, false},
    {false, Mag::one, true},
    {false, Mag::zero, true},
    {true, Mag::one, true},
    {true, Mag::huge, true},
}};

constexpr std::array<RealPoint, 12> atanh_points{{
    {false, Mag::huge, false},
    {false, Mag::one_eps, false},
    {false, Mag::one, false},
    {false, Mag::one, true},
    {false, Mag::one_eps, true},
    {false, Mag::huge, true},
    {true, Mag::huge, false},
    {true, Mag::one_eps, false},
    {true, Mag::one, false},
    {true, Mag::one, true},
    {true, Mag::one_eps, true},
    {true, Mag::huge, true},
}};

// Imaginary part of atan / real part of atanh at |a| on the cut: c(a).
template <IeeeFloat T>
ComponentExpectation<T> c_expectation(Mag mag, bool negative) {
    const SignRule sign = sign_of(negative);
    switch (mag) {
    case Mag::huge:
        return subnormal(helper_c(magnitude<T>(Mag::huge)), sign);
    case Mag::one:
        return infinite<T>(sign);
    default:
        return exact(helper_c(magnitude<T>(mag)), sign);
    }
}

// Imaginary part of asin / acos, real part of asinh: b(a), a in {1, h}.
template <IeeeFloat T>
ComponentExpectation<T> b_expectation(Mag mag, bool negative) {
    if (mag == Mag::one) {
        return zero<T>(sign_of(negative));
    }
    return lower_bounded(format_params<T>().log2h, sign_of(negative));
}

}  // namespace

FailureSet::FailureSet(std::initializer_list<Failure> letters) {
    for (Failure f : letters) {
        add(f);
    }
}

char failure_char(Failure f) noexcept {
    return failure_chars[static_cast<std::size_t>(f)];
}

std::string FailureSet::symbol() const {
    if (empty()) {
        return "·";
    }
    if (contains(Failure::unsupported)) {
        return "×";
    }
    return letters();
}

std::string FailureSet::letters() const {
    std::string out;
    for (std::size_t i = 0; i < failure_count; ++i) {
        if (bits_.test(i)) {
            out += failure_chars[i];
        }
    }
    return out;
}

FailureSet FailureSet::parse(std::string_view text) {
    FailureSet out;
    for (char c : text) {
        bool found = false;
        for (std::size_t i = 0; i < failure_count; ++i) {
            if (failure_chars[i] == c) {
                out.add(static_cast<Failure>(i));
                found = true;
            }
        }
        if (!found) {
            throw ParseError(std::string("unknown failure letter '") + c + "'");
        }
    }
    return out;
}

std::string_view to_string(Mode m) noexcept {
    return m == Mode::paper ? "paper" : "strict";
}

Mode parse_mode(std::string_view name) {
    if (name == "paper") {
        return Mode::paper;
    }
    if (name == "strict") {
        return Mode::strict;
    }
    throw UsageError("unknown mode '" + std::string(name) + "'");
}

template <IeeeFloat T>
FailureSet classify_component(const ComponentExpectation<T>& expect, T actual, const ProviderCapabilities& caps,
                              Mode mode) {
    FailureSet f;
    if (std::isnan(actual)) {
        f.add(Failure::n);
        return f;
    }
    const bool sign_wrong =
        expect.sign != SignRule::immaterial && sign_bit(actual) != (expect.sign == SignRule::negative);
    const bool is_inf = std::isinf(actual);
    const bool is_zero = actual == 0;
    const T mag = std::fabs(actual);

    // A zero where a nonzero value belongs is "z" whatever its sign.
    auto nonzero_checks = [&] {
        if (is_inf) {
            f.add(Failure::o);
        } else if (is_zero) {
            f.add(Failure::z);
            return;
        }
        if (sign_wrong) {
            f.add(Failure::s);
        }
    };

    switch (expect.kind) {
    case ExpectKind::exact_signed:
        nonzero_checks();
        if (mode == Mode::strict && !is_inf && !is_zero &&
            ulp_distance(mag, expect.value) > static_cast<BitsOf<T>>(expect.max_ulps)) {
            f.add(Failure::m);
        }
        break;
    case ExpectKind::lower_bounded_finite:
        nonzero_checks();
        if (!is_inf && !is_zero && (mag <= expect.bound || (mode == Mode::strict && mag > 2 * expect.bound))) {
            f.add(Failure::m);
        }
        break;
    case ExpectKind::signed_zero:
        if (is_inf) {
            f.add(Failure::o);
        } else if (!is_zero) {
            f.add(Failure::p);
        }
        if (sign_wrong) {
            f.add(Failure::s);
        }
        break;
    case ExpectKind::signed_inf:
        if (is_zero) {
            f.add(Failure::z);
            break;
        }
        if (!is_inf) {
            f.add(Failure::m);
        }
        if (sign_wrong) {
            f.add(Failure::s);
        }
        break;
    case ExpectKind::subnormal_expected: {
        const bool is_sub = std::fpclassify(actual) == FP_SUBNORMAL;
        if (caps.subnormal_support) {
            nonzero_checks();
            if (!is_inf && !is_zero) {
                if (!is_sub) {
                    f.add(Failure::m);
                } else if (mode == Mode::strict &&
                           ulp_distance(mag, expect.value) > static_cast<BitsOf<T>>(expect.max_ulps)) {
                    f.add(Failure::m);
                }
            }
        } else {
            // Without subnormals the correctly signed zero is the answer.
            if (is_inf) {
                f.add(Failure::o);
            } else if (is_sub) {
                f.add(Failure::d);
            } else if (!is_zero) {
                f.add(Failure::p);
            }
            if (sign_wrong) {
                f.add(Failure::s);
            }
        }
        break;
    }
    case ExpectKind::any_finite:
        if (is_inf) {
            f.add(Failure::o);
        }
        break;
    }
    return f;
}

template <IeeeFloat T>
CaseResult classify_case(const TestCase<T>& tc, const std::optional<SignedComplex<T>>& actual,
                         const ProviderCapabilities& caps, Mode mode) {
    CaseResult r;
    r.case_id = tc.id;
    r.function = tc.function;
    r.precision = precision_of<T>;
    r.input_re_hex = encode_bits(tc.input.re);
    r.input_im_hex = encode_bits(tc.input.im);
    if (!actual) {
        r.failures.add(Failure::unsupported);
        r.unsupported = true;
        return r;
    }
    r.actual = std::make_pair(encode_bits(actual->re), encode_bits(actual->im));
    r.failures = classify_component(tc.expect_re, actual->re, caps, mode) |
                 classify_component(tc.expect_im, actual->im, caps, mode);
    return r;
}

template <IeeeFloat T>
std::vector<TestCase<T>> build_suite() {
    const FormatParams<T> p = format_params<T>();
    constexpr T pi = std::numbers::pi_v<T>;
    constexpr T half_pi = pi / 2;
    std::vector<TestCase<T>> out;
    out.reserve(70);

    for (const RealPoint& pt : log_points) {
        ComponentExpectation<T> re;
        switch (pt.mag) {
        case Mag::huge:
            re = exact(std::log(p.h), SignRule::positive);
            break;
        case Mag::tiny:
            re = exact(-std::log(p.t), SignRule::negative);
            break;
        default:
            re = zero<T>(SignRule::immaterial);
            break;
        }
        out.push_back(make_case(FunctionId::log, coord<T>(pt.xneg, pt.mag), coord<T>(pt.yneg, Mag::zero), re,
                                exact(pi, sign_of(pt.yneg))));
    }

    for (const RealPoint& pt : sqrt_points) {
        ComponentExpectation<T> re = zero<T>(SignRule::positive);
        ComponentExpectation<T> im;
        if (pt.mag == Mag::zero) {
            re = zero<T>(SignRule::immaterial);
            im = zero<T>(sign_of(pt.yneg));
        } else {
            im = exact(std::sqrt(magnitude<T>(pt.mag)), sign_of(pt.yneg));
        }
        out.push_back(make_case(FunctionId::sqrt, coord<T>(pt.xneg, pt.mag), coord<T>(pt.yneg, Mag::zero), re, im));
    }

    for (const RealPoint& pt : asin_points) {
        out.push_back(make_case(FunctionId::asin, coord<T>(pt.xneg, pt.mag), coord<T>(pt.yneg, Mag::zero),
                                exact(half_pi, sign_of(pt.xneg)), b_expectation<T>(pt.mag, pt.yneg)));
    }

    for (const RealPoint& pt : asin_points) {
        const ComponentExpectation<T> re = pt.xneg ? exact(pi, SignRule::positive) : zero<T>(SignRule::positive);
        out.push_back(make_case(FunctionId::acos, coord<T>(pt.xneg, pt.mag), coord<T>(pt.yneg, Mag::zero), re,
                                b_expectation<T>(pt.mag, !pt.yneg)));
    }

    for (const ImagPoint& pt : atan_points) {
        const ComponentExpectation<T> re = pt.mag == Mag::one ? any_finite<T>() : exact(half_pi, sign_of(pt.xneg));
        out.push_back(make_case(FunctionId::atan, coord<T>(pt.xneg, Mag::zero), coord<T>(pt.yneg, pt.mag), re,
                                c_expectation<T>(pt.mag, pt.yneg)));
    }

    for (const ImagPoint& pt : asinh_points) {
        out.push_back(make_case(FunctionId::asinh, coord<T>(pt.xneg, Mag::zero), coord<T>(pt.yneg, pt.mag),
                                b_expectation<T>(pt.mag, pt.xneg), exact(half_pi, sign_of(pt.yneg))));
    }

    for (const RealPoint& pt : acosh_points) {
        ComponentExpectation<T> re = zero<T>(SignRule::positive);
        ComponentExpectation<T> im;
        const SignRule ys = sign_of(pt.yneg);
        switch (pt.mag) {
        case Mag::huge:
            re = lower_bounded(p.log2h, SignRule::positive);
            im = exact(pi, ys);
            break;
        case Mag::one:
            im = pt.xneg ? exact(pi, ys) : zero<T>(ys);
            break;
        default:
            im = exact(half_pi, ys);
            break;
        }
        out.push_back(make_case(FunctionId::acosh, coord<T>(pt.xneg, pt.mag), coord<T>(pt.yneg, Mag::zero), re, im));
    }

    for (const RealPoint& pt : atanh_points) {
        const ComponentExpectation<T> im = pt.mag == Mag::one ? any_finite<T>() : exact(half_pi, sign_of(pt.yneg));
        out.push_back(make_case(FunctionId::atanh, coord<T>(pt.xneg, pt.mag), coord<T>(pt.yneg, Mag::zero),
                                c_expectation<T>(pt.mag, pt.xneg), im));
    }
    return out;
}

std::vector<std::string> suite_case_ids(Precision p) {
    return dispatch_precision(p, [](auto tag) {
        std::vector<std::string> ids;
        for (const auto& tc : build_suite<decltype(tag)>()) {
            ids.push_back(tc.id);
        }
        return ids;
    });
}

PassRate pass_rate(const std::vector<CaseResult>& results) {
    std::map<FunctionId, bool> all_unsupported;
    for (const CaseResult& r : results) {
        auto [it, inserted] = all_unsupported.emplace(r.function, r.unsupported);
        if (!inserted) {
            it->second = it->second && r.unsupported;
        }
    }
    PassRate rate;
    for (const CaseResult& r : results) {
        if (all_unsupported[r.function]) {
            continue;
        }
        ++rate.denominator;
        if (r.passed()) {
            ++rate.passed;
        }
    }
    return rate;
}

namespace {

template <IeeeFloat T>
SuiteRun run_typed(Provider& provider, Mode mode) {
    const ProviderCapabilities caps = provider.capabilities();
    SuiteRun run;
    run.precision = precision_of<T>;
    run.provider = provider.name();
    run.mode = mode;
    if (!caps.supports(run.precision)) {
        throw CapabilityError("provider " + run.provider + " does not advertise " +
                              std::string(to_string(run.precision)));
    }
    for (const TestCase<T>& tc : build_suite<T>()) {
        const EvalRequest req{tc.function, run.precision, encode_bits(tc.input.re), encode_bits(tc.input.im)};
        try {
            const EvalResponse resp = provider.evaluate(req);
            switch (resp.kind) {
            case EvalResponse::Kind::ok: {
                SignedComplex<T> w;
                try {
                    w = {decode_bits<T>(resp.re_hex), decode_bits<T>(resp.im_hex)};
                } catch (const ParseError& e) {
                    throw ProtocolError(tc.id + ": bad reply: " + e.what());
                }
                run.results.push_back(classify_case<T>(tc, w, caps, mode));
                break;
            }
            case EvalResponse::Kind::unsupported:
                run.results.push_back(classify_case<T>(tc, std::nullopt, caps, mode));
                break;
            case EvalResponse::Kind::error: {
                CaseResult r = classify_case<T>(tc, std::nullopt, caps, mode);
                r.unsupported = false;
                r.note = resp.message.empty() ? "provider error" : resp.message;
                run.results.push_back(std::move(r));
                break;
            }
            }
        } catch (const ProtocolError& e) {
            run.rate = pass_rate(run.results);
            throw RunError(std::string("run aborted at ") + tc.id + ": " + e.what(), std::move(run));
        }
    }
    run.rate = pass_rate(run.results);
    return run;
}

}  // namespace

SuiteRun run_suite(Provider& provider, Precision p, Mode mode) {
    require_supported(p);
    return dispatch_precision(p, [&](auto tag) { return run_typed<decltype(tag)>(provider, mode); });
}

#define CCBENCH_INSTANTIATE_SUITE(T)                                                                            \
    template FailureSet classify_component<T>(const ComponentExpectation<T>&, T, const ProviderCapabilities&, \
                                              Mode);                                                          \
    template CaseResult classify_case<T>(const TestCase<T>&, const std::optional<SignedComplex<T>>&,          \
                                         const ProviderCapabilities&, Mode);                                  \
    template std::vector<TestCase<T>> build_suite<T>();

CCBENCH_INSTANTIATE_SUITE(float)
CCBENCH_INSTANTIATE_SUITE(double)
#if CCBENCH_HAS_BINARY128
CCBENCH_INSTANTIATE_SUITE(binary128_t)
#endif

#undef CCBENCH_INSTANTIATE_SUITE

}  // namespace ccbench
