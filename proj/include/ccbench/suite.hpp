#pragma once

// The 70-point branch-cut suite, its per-component expectations, and the
// failure classifier with letters x d m n o p s z.

#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccbench/provider.hpp"

namespace ccbench {

enum class ExpectKind {
    exact_signed,          ///< finite nonzero value with a required sign
    signed_zero,           ///< ±0, sign possibly immaterial
    signed_inf,            ///< ±inf
    lower_bounded_finite,  ///< finite, |v| > bound (log2h)
    subnormal_expected,    ///< tiny value that is subnormal in the format
    any_finite,            ///< anything finite
};

enum class SignRule { positive, negative, immaterial };

template <IeeeFloat T>
struct ComponentExpectation {
    ExpectKind kind = ExpectKind::any_finite;
    SignRule sign = SignRule::immaterial;
    T value{};   ///< magnitude for exact_signed / subnormal_expected
    T bound{};   ///< lower bound for lower_bounded_finite
    int max_ulps = 4;
};

template <IeeeFloat T>
struct TestCase {
    std::string id;
    FunctionId function = FunctionId::log;
    SignedComplex<T> input;
    ComponentExpectation<T> expect_re;
    ComponentExpectation<T> expect_im;
};

/// Failure letters in their canonical print order.
enum class Failure { unsupported, d, m, n, o, p, s, z };

inline constexpr std::size_t failure_count = 8;

/// Ordered set of failure letters. Empty means pass.
class FailureSet {
public:
    FailureSet() = default;
    FailureSet(std::initializer_list<Failure> letters);

    void add(Failure f) { bits_.set(static_cast<std::size_t>(f)); }
    bool contains(Failure f) const { return bits_.test(static_cast<std::size_t>(f)); }
    bool empty() const { return bits_.none(); }
    std::size_t size() const { return bits_.count(); }

    FailureSet& operator|=(const FailureSet& other) {
        bits_ |= other.bits_;
        return *this;
    }
    friend FailureSet operator|(FailureSet a, const FailureSet& b) { return a |= b; }
    friend bool operator==(const FailureSet&, const FailureSet&) = default;

    /// Table symbol: "·" for pass, "×" for unsupported, else letters ("osz").
    std::string symbol() const;
    /// Machine form: empty for pass, "x" for unsupported, else letters.
    std::string letters() const;
    /// Inverse of letters(). Throws ParseError.
    static FailureSet parse(std::string_view text);

private:
    std::bitset<failure_count> bits_;
};

char failure_char(Failure f) noexcept;

enum class Mode { paper, strict };

std::string_view to_string(Mode m) noexcept;
Mode parse_mode(std::string_view name);

/// Letters for one component. Paper mode checks class, sign and the log2h
/// bound; strict mode also checks values against refmath within max_ulps and
/// caps lower-bounded magnitudes at 2 * bound.
template <IeeeFloat T>
FailureSet classify_component(const ComponentExpectation<T>& expect, T actual, const ProviderCapabilities& caps,
                              Mode mode = Mode::paper);

struct CaseResult {
    std::string case_id;
    FunctionId function = FunctionId::log;
    Precision precision = Precision::binary64;
    std::string input_re_hex;
    std::string input_im_hex;
    std::optional<std::pair<std::string, std::string>> actual;  ///< empty for x rows
    FailureSet failures;
    bool unsupported = false;  ///< provider answered UNSUPPORTED
    std::string note;          ///< provider ERROR message, if any

    bool passed() const { return failures.empty(); }
};

/// `actual` empty means the provider answered UNSUPPORTED.
template <IeeeFloat T>
CaseResult classify_case(const TestCase<T>& tc, const std::optional<SignedComplex<T>>& actual,
                         const ProviderCapabilities& caps, Mode mode = Mode::paper);

/// The 70 cases, grouped by function in a fixed order.
template <IeeeFloat T>
std::vector<TestCase<T>> build_suite();

/// Case ids for `p`, in suite order. Throws CapabilityError.
std::vector<std::string> suite_case_ids(Precision p);

struct PassRate {
    int passed = 0;
    int denominator = 0;
};

/// Denominator drops a function only when every one of its cases was
/// answered UNSUPPORTED.
PassRate pass_rate(const std::vector<CaseResult>& results);

struct SuiteRun {
    Precision precision = Precision::binary64;
    std::string provider;
    Mode mode = Mode::paper;
    std::vector<CaseResult> results;
    PassRate rate;
};

/// Transport failure mid-run. Carries everything classified so far.
class RunError : public Error {
public:
    RunError(const std::string& what, SuiteRun partial) : Error(what), partial_(std::move(partial)) {}
    const SuiteRun& partial() const noexcept { return partial_; }

private:
    SuiteRun partial_;
};

/// Throws CapabilityError when the provider or build lacks `p`, RunError on
/// transport failure.
SuiteRun run_suite(Provider& provider, Precision p, Mode mode = Mode::paper);

}  // namespace ccbench
