// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ccbench/cli.hpp"
#include "ccbench/mapper.hpp"
#include "ccbench/report.hpp"
#include "oracle.hpp"

using namespace ccbench;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        } else if (!cond) {
            detail << "; " << what;
        }
    }
};

int failures = 0;

void report(const char* name, Check& c, const std::string& summary_text) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << (c.ok ? summary_text : c.detail.str()) << '\n';
    if (!c.ok) {
        ++failures;
    }
}

template <IeeeFloat T>
std::string hex(SignedComplex<T> z) {
    return "(" + encode_bits(z.re) + ", " + encode_bits(z.im) + ")";
}

void self_conformance() {
    Check c;
    std::ostringstream rates;
    const auto start = std::chrono::steady_clock::now();
    for (Precision p : supported_precisions()) {
        std::istringstream in;
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli({"run", "--provider", "builtin", "--precision", std::string(to_string(p))}, in, out,
                                 err);
        c.require(code == exit_ok, std::string(to_string(p)) + " exit " + std::to_string(code));
        c.require(out.str().find("Pass rate 70/70") != std::string::npos,
                  std::string(to_string(p)) + " " + err.str());
        rates << to_string(p) << " 70/70 ";
        // The installed executable as well, process start-up included.
        const std::string cmd = std::string(CCBENCH_CLI_PATH) + " run --provider builtin --precision " +
                                std::string(to_string(p)) + " > /dev/null 2>&1";
        c.require(std::system(cmd.c_str()) == 0, "'" + cmd + "' failed");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
    rates << "in " << secs << " s";
    report("self-conformance", c, rates.str());
}

void log2h_values() {
    Check c;
    const float l32 = format_params<float>().log2h;
    const double l64 = format_params<double>().log2h;
    const float o32 = oracle::log2h(std::numeric_limits<float>::max());
    const double o64 = oracle::log2h(std::numeric_limits<double>::max());
    c.require(l32 == 89.0f && l32 == o32, "binary32 log2h " + std::to_string(l32));
    c.require(l64 == 710.0 && l64 == o64, "binary64 log2h " + std::to_string(l64));
    report("log2h", c, "binary32 89, binary64 710, equal to the 512-bit evaluation");
}

void subnormal_contract() {
    Check c;
    const double h = std::numeric_limits<double>::max();
    const double expect = oracle::c(h);
    const double a = catan(SignedComplex<double>{0.0, h}).im;
    const double b = catanh(SignedComplex<double>{h, 0.0}).re;
    for (double v : {a, b}) {
        c.require(classify(v) == FloatClass::pos_subnormal, "not a positive subnormal: " + encode_bits(v));
        c.require(ulp_distance(v, expect) <= 4, encode_bits(v) + " vs oracle " + encode_bits(expect));
    }
    c.require(std::fabs(expect - 5.6e-309) < 0.05e-309, "oracle magnitude " + std::to_string(expect));
    std::ostringstream msg;
    msg << "Im catan(+0+ih) = Re catanh(h+i0) = " << a << " (" << ulp_distance(a, expect) << " ulp from oracle)";
    report("subnormal contract", c, msg.str());
}

template <IeeeFloat T>
void overflow_for(Check& c, std::ostringstream& msg) {
    const FormatParams<T> p = format_params<T>();
    const ProviderCapabilities caps{true, {precision_of<T>}};
    T min_b = std::numeric_limits<T>::infinity();
    for (const TestCase<T>& tc : build_suite<T>()) {
        const bool target = tc.function == FunctionId::asin || tc.function == FunctionId::acos ||
                            tc.function == FunctionId::asinh || tc.function == FunctionId::acosh ||
                            tc.function == FunctionId::sqrt;
        if (!target || (std::fabs(tc.input.re) != p.h && std::fabs(tc.input.im) != p.h)) {
            continue;
        }
        const SignedComplex<T> w = builtin_eval(tc.function, tc.input);
        c.require(std::isfinite(w.re) && std::isfinite(w.im), tc.id + " not finite " + hex(w));
        const CaseResult r = classify_case<T>(tc, w, caps);
        c.require(r.passed(), tc.id + " letters " + r.failures.letters());
        if (tc.function != FunctionId::sqrt) {
            const T b = tc.function == FunctionId::asin || tc.function == FunctionId::acos ? std::fabs(w.im)
                                                                                             : std::fabs(w.re);
            c.require(b > p.log2h, tc.id + " b-magnitude below log2h");
            min_b = std::min(min_b, b);
        }
    }
    // Off-axis arguments of magnitude h as well.
    for (FunctionId fn : {FunctionId::sqrt, FunctionId::asin, FunctionId::acos, FunctionId::asinh, FunctionId::acosh}) {
        for (T x : {p.h, -p.h}) {
            for (T y : {p.h, -p.h}) {
                const SignedComplex<T> w = builtin_eval<T>(fn, {x, y});
                c.require(std::isfinite(w.re) && std::isfinite(w.im),
                          std::string(to_string(fn)) + " at (" + encode_bits(x) + ", " + encode_bits(y) + ")");
            }
        }
    }
    msg << to_string(precision_of<T>) << " min b " << static_cast<double>(min_b) << " > " << p.log2h << "; ";
}

void overflow_safety() {
    Check c;
    std::ostringstream msg;
    overflow_for<float>(c, msg);
    overflow_for<double>(c, msg);
#if CCBENCH_HAS_BINARY128
    overflow_for<binary128_t>(c, msg);
#endif
    report("overflow safety", c, msg.str() + "all finite with table signs");
}

// Builtin answers with each returned component rewritten.
class PerturbingProvider final : public Provider {
public:
    using Rewrite = std::function<double(double)>;

    PerturbingProvider(Rewrite rewrite, bool subnormals) : rewrite_(std::move(rewrite)), subnormals_(subnormals) {}

    std::string name() const override { return "perturbing"; }
    ProviderCapabilities capabilities() override { return {subnormals_, {Precision::binary32, Precision::binary64}}; }
    EvalResponse evaluate(const EvalRequest& req) override {
        EvalResponse r = inner_.evaluate(req);
        if (r.kind != EvalResponse::Kind::ok) {
            return r;
        }
        return dispatch_precision(req.precision, [&](auto tag) {
            using T = decltype(tag);
            const T re = static_cast<T>(rewrite_(static_cast<double>(decode_bits<T>(r.re_hex))));
            const T im = static_cast<T>(rewrite_(static_cast<double>(decode_bits<T>(r.im_hex))));
            return EvalResponse::ok(encode_bits(re), encode_bits(im));
        });
    }

private:
    BuiltinProvider inner_;
    Rewrite rewrite_;
    bool subnormals_;
};

// Functions answered UNSUPPORTED.
class DroppingProvider final : public Provider {
public:
    explicit DroppingProvider(std::vector<FunctionId> dropped) : dropped_(std::move(dropped)) {}

    std::string name() const override { return "dropping"; }
    ProviderCapabilities capabilities() override { return inner_.capabilities(); }
    EvalResponse evaluate(const EvalRequest& req) override {
        if (std::find(dropped_.begin(), dropped_.end(), req.fn) != dropped_.end()) {
            return EvalResponse::unsupported();
        }
        return inner_.evaluate(req);
    }

private:
    BuiltinProvider inner_;
    std::vector<FunctionId> dropped_;
};

struct Injection {
    Failure letter;
    bool subnormals;
    PerturbingProvider::Rewrite rewrite;
    // Whether a component with this expectation is targeted.
    std::function<bool(ExpectKind, SignRule)> targets;
};

template <IeeeFloat T>
void injection_for(Check& c, std::ostringstream& msg) {
    const double log2h = format_params<T>().log2h;
    const double inf = std::numeric_limits<double>::infinity();
    const double tiny_normal = std::numeric_limits<T>::min();
    const std::vector<Injection> injections{
        // Subnormal results from a provider that claims no subnormal support.
        {Failure::d, false, [](double v) { return v; },
         [](ExpectKind k, SignRule) { return k == ExpectKind::subnormal_expected; }},
        // b-magnitudes pulled down to log h.
        {Failure::m, true,
         [=](double v) { return std::fabs(v) > log2h && std::isfinite(v) ? std::copysign(log2h - 0.5, v) : v; },
         [](ExpectKind k, SignRule) { return k == ExpectKind::lower_bounded_finite; }},
        {Failure::n, true, [](double) { return std::nan(""); }, [](ExpectKind, SignRule) { return true; }},
        // Overflow: every finite nonzero or zero answer becomes a signed infinity.
        {Failure::o, true, [=](double v) { return std::copysign(inf, v); },
         [](ExpectKind k, SignRule) { return k != ExpectKind::signed_inf; }},
        // Zeros replaced by the smallest normal of the same sign.
        {Failure::p, true, [=](double v) { return v == 0 ? std::copysign(tiny_normal, v) : v; },
         [](ExpectKind k, SignRule) { return k == ExpectKind::signed_zero; }},
        {Failure::s, true, [](double v) { return -v; },
         [](ExpectKind k, SignRule s) { return s != SignRule::immaterial && k != ExpectKind::any_finite; }},
        // Nonzero answers flushed to zero of the same sign.
        {Failure::z, true, [](double v) { return v != 0 ? std::copysign(0.0, v) : v; },
         [](ExpectKind k, SignRule) { return k != ExpectKind::signed_zero && k != ExpectKind::any_finite; }},
    };
    const std::vector<TestCase<T>> suite = build_suite<T>();
    msg << to_string(precision_of<T>) << " ";
    for (const Injection& inj : injections) {
        PerturbingProvider provider(inj.rewrite, inj.subnormals);
        const SuiteRun run = run_suite(provider, precision_of<T>);
        FailureSet only;
        only.add(inj.letter);
        int hit = 0;
        for (std::size_t i = 0; i < suite.size(); ++i) {
            const TestCase<T>& tc = suite[i];
            const bool targeted = inj.targets(tc.expect_re.kind, tc.expect_re.sign) ||
                                  inj.targets(tc.expect_im.kind, tc.expect_im.sign);
            const FailureSet want = targeted ? only : FailureSet{};
            if (targeted) {
                ++hit;
            }
            c.require(run.results[i].failures == want, std::string(to_string(precision_of<T>)) + " injection " +
                                                           failure_char(inj.letter) + " on " + tc.id + " gave '" +
                                                           run.results[i].failures.letters() + "'");
        }
        c.require(hit > 0, std::string("injection ") + failure_char(inj.letter) + " targets nothing");
        msg << failure_char(inj.letter) << ":" << hit << " ";
    }

    DroppingProvider dropping({FunctionId::acosh, FunctionId::atanh});
    const SuiteRun run = run_suite(dropping, precision_of<T>);
    int crosses = 0;
    for (const CaseResult& r : run.results) {
        const bool dropped = r.function == FunctionId::acosh || r.function == FunctionId::atanh;
        c.require(dropped == (r.failures.symbol() == "×"), r.case_id + " drop symbol " + r.failures.symbol());
        crosses += dropped ? 1 : 0;
    }
    c.require(crosses == 20 && run.rate.passed == 50 && run.rate.denominator == 50,
              "dropping provider rate " + std::to_string(run.rate.passed) + "/" +
                  std::to_string(run.rate.denominator));
    msg << "x:" << crosses << " (" << run.rate.passed << "/" << run.rate.denominator << ") ";
}

void failure_injection() {
    Check c;
    std::ostringstream msg;
    injection_for<float>(c, msg);
    injection_for<double>(c, msg);
    report("failure-injection matrix", c, msg.str());
}

template <IeeeFloat T>
void symmetry_for(Check& c, int& checked) {
    for (const TestCase<T>& tc : build_suite<T>()) {
        const SignedComplex<T> w = builtin_eval(tc.function, tc.input);
        const SignedComplex<T> wc = builtin_eval(tc.function, conj(tc.input));
        c.require(identical(wc, conj(w)), tc.id + " conjugate " + hex(wc) + " vs " + hex(conj(w)));
        ++checked;
        if (tc.function == FunctionId::asin || tc.function == FunctionId::atan || tc.function == FunctionId::asinh ||
            tc.function == FunctionId::atanh) {
            const SignedComplex<T> wn = builtin_eval(tc.function, negate(tc.input));
            c.require(identical(wn, negate(w)), tc.id + " odd " + hex(wn) + " vs " + hex(negate(w)));
            ++checked;
        }
    }
}

template <IeeeFloat T>
void log_identity_for(Check& c) {
    for (T x : {T(0), T(-0.0)}) {
        for (T y : {T(0), T(-0.0)}) {
            const SignedComplex<T> z{x, y};
            const SignedComplex<T> l = clog(z);
            const SignedComplex<T> e = cexp(SignedComplex<T>{l.re / 2, l.im / 2});
            const SignedComplex<T> s = csqrt(z);
            // The sign of the real part of sqrt(0 ± i0) is immaterial, so only its
            // zero-ness is compared; the imaginary part must match in class and sign.
            c.require(e.re == 0 && s.re == 0 && classify(e.im) == classify(s.im),
                      "exp(log(z)/2) " + hex(e) + " vs sqrt " + hex(s));
        }
    }
}

void symmetry_suites() {
    Check c;
    int checked = 0;
    symmetry_for<float>(c, checked);
    symmetry_for<double>(c, checked);
    log_identity_for<float>(c);
    log_identity_for<double>(c);
    report("symmetry suites", c, std::to_string(checked) + " symmetry checks bit-exact; log/exp identity at 4 zeros");
}

void joukowski_inverse_cut() {
    Check c;
    const auto traces = trace_cuts<double>(MapFunction::joukowski_inverse, 500);
    int samples = 0;
    std::uint64_t worst = 0;
    for (const auto& tr : traces) {
        for (const auto& s : tr.samples) {
            const double modulus = std::hypot(s.w.re, s.w.im);
            const std::uint64_t d = ulp_distance(modulus, 1.0);
            worst = std::max(worst, d);
            c.require(d <= 4, "modulus " + std::to_string(modulus) + " at x=" + std::to_string(s.z.re));
            c.require(sign_bit(s.w.im) == sign_bit(s.z.im), "Im w sign at x=" + std::to_string(s.z.re));
            ++samples;
        }
    }
    c.require(samples >= 1000, "only " + std::to_string(samples) + " samples");
    c.require(identical(joukowski_inverse(SignedComplex<double>{0.0, 0.0}), SignedComplex<double>{0.0, 1.0}),
              "anchor 0+i0");
    c.require(identical(joukowski_inverse(SignedComplex<double>{0.0, -0.0}), SignedComplex<double>{0.0, -1.0}),
              "anchor 0-i0");
    report("joukowski inverse", c,
           std::to_string(samples) + " cut samples, max modulus error " + std::to_string(worst) +
               " ulp; anchors (0, +1) and (0, -1)");
}

template <IeeeFloat T>
void loopback_for(Check& c, Provider& remote, int& compared) {
    BuiltinProvider local;
    for (const TestCase<T>& tc : build_suite<T>()) {
        const EvalRequest req{tc.function, precision_of<T>, encode_bits(tc.input.re), encode_bits(tc.input.im)};
        const EvalResponse a = remote.evaluate(req);
        const EvalResponse b = local.evaluate(req);
        const SignedComplex<T> direct = builtin_eval(tc.function, tc.input);
        c.require(a.kind == EvalResponse::Kind::ok && a.re_hex == b.re_hex && a.im_hex == b.im_hex &&
                      a.re_hex == encode_bits(direct.re) && a.im_hex == encode_bits(direct.im),
                  tc.id + " loopback " + format_response(a) + " vs " + format_response(b));
        ++compared;
    }
}

void protocol() {
    Check c;
    int compared = 0;
    try {
        SubprocessProvider remote(std::string(CCBENCH_CLI_PATH) + " serve-protocol");
        loopback_for<float>(c, remote, compared);
        loopback_for<double>(c, remote, compared);
    } catch (const Error& e) {
        c.require(false, std::string("loopback: ") + e.what());
    }
    std::mt19937_64 rng(2024);
    int roundtrips = 0;
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t b64 = rng();
        const auto b32 = static_cast<std::uint32_t>(b64 >> 17);
        const std::string h64 = encode_bits(from_bits<double>(b64));
        const std::string h32 = encode_bits(from_bits<float>(b32));
        if (to_bits(decode_bits<double>(h64)) != b64 || to_bits(decode_bits<float>(h32)) != b32 ||
            h64.size() != 16 || h32.size() != 8) {
            c.require(false, "codec mismatch at " + h64);
            break;
        }
        ++roundtrips;
    }
    report("protocol", c,
           std::to_string(compared) + " loopback cases bit-identical; " + std::to_string(roundtrips) +
               " codec round-trips per format");
}

}  // namespace

int main() {
    self_conformance();
    log2h_values();
    subnormal_contract();
    overflow_safety();
    failure_injection();
    symmetry_suites();
    joukowski_inverse_cut();
    protocol();
    std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
