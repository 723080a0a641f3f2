#include "ccbench/mapper.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <system_error>

namespace ccbench {

namespace {

template <IeeeFloat T>
std::vector<T> linspace(double lo, double hi, int n) {
    std::vector<T> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<T>(lo + (hi - lo) * i / (n - 1));
    }
    out.front() = static_cast<T>(lo);
    out.back() = static_cast<T>(hi);
    return out;
}

template <IeeeFloat T>
std::vector<T> logspace(double lo, double hi, int n) {
    std::vector<T> out(static_cast<std::size_t>(n));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<T>(lo * std::exp(ratio * i / (n - 1)));
    }
    out.front() = static_cast<T>(lo);
    out.back() = static_cast<T>(hi);
    return out;
}

std::string next_label(int& counter) {
    std::string s;
    int k = counter++;
    do {
        s.insert(s.begin(), static_cast<char>('A' + k % 26));
        k = k / 26 - 1;
    } while (k >= 0);
    return s;
}

// Real-axis cut membership at x (used for grid-line splitting).
bool on_real_cut(MapFunction fn, double x) {
    switch (fn) {
    case MapFunction::log:
    case MapFunction::sqrt:
        return x <= 0;
    case MapFunction::asin:
    case MapFunction::acos:
    case MapFunction::atanh:
        return std::fabs(x) >= 1;
    case MapFunction::acosh:
        return x <= 1;
    case MapFunction::joukowski_inverse:
        return std::fabs(x) <= 2;
    case MapFunction::cross:
        return std::fabs(x) >= 2;
    default:
        return false;
    }
}

bool on_imag_cut(MapFunction fn, double y) {
    switch (fn) {
    case MapFunction::atan:
    case MapFunction::asinh:
        return std::fabs(y) >= 1;
    case MapFunction::cross:
        return std::fabs(y) >= 2;
    default:
        return false;
    }
}

template <IeeeFloat T>
bool crosses_cut(MapFunction fn, SignedComplex<T> a, SignedComplex<T> b) {
    if (sign_bit(a.im) != sign_bit(b.im)) {
        const double dy = static_cast<double>(b.im) - static_cast<double>(a.im);
        const double x = dy == 0 ? static_cast<double>(a.re)
                                 : static_cast<double>(a.re) +
                                       (static_cast<double>(b.re) - static_cast<double>(a.re)) *
                                           (-static_cast<double>(a.im) / dy);
        if (on_real_cut(fn, x)) {
            return true;
        }
    }
    if (sign_bit(a.re) != sign_bit(b.re)) {
        const double dx = static_cast<double>(b.re) - static_cast<double>(a.re);
        const double y = dx == 0 ? static_cast<double>(a.im)
                                 : static_cast<double>(a.im) +
                                       (static_cast<double>(b.im) - static_cast<double>(a.im)) *
                                           (-static_cast<double>(a.re) / dx);
        if (on_imag_cut(fn, y)) {
            return true;
        }
    }
    return false;
}

template <IeeeFloat T>
CurveTrace<T> make_trace(MapFunction fn, const std::string& id, const std::vector<T>& ts,
                         SignedComplex<T> (*point)(T t, bool negative_side, double sign), bool negative_side,
                         double sign, int& label_counter) {
    CurveTrace<T> trace;
    trace.curve_id = std::string(to_string(fn)) + ":" + id;
    for (T t : ts) {
        const SignedComplex<T> z = point(t, negative_side, sign);
        trace.samples.push_back({t, z, map_eval(fn, z), {}});
    }
    const std::size_t n = trace.samples.size();
    trace.samples.front().label = next_label(label_counter);
    trace.samples[n / 2].label = next_label(label_counter);
    trace.samples.back().label = next_label(label_counter);
    return trace;
}

// Point on a real-axis cut: x = sign * t, y = ±0.
template <IeeeFloat T>
SignedComplex<T> real_cut_point(T t, bool bottom, double sign) {
    return {static_cast<T>(sign) * t, bottom ? T(-0.0) : T(0.0)};
}

// Point on an imaginary-axis cut: y = sign * t, x = ±0.
template <IeeeFloat T>
SignedComplex<T> imag_cut_point(T t, bool left, double sign) {
    return {left ? T(-0.0) : T(0.0), static_cast<T>(sign) * t};
}

}  // namespace

std::string_view to_string(MapFunction fn) noexcept {
    switch (fn) {
    case MapFunction::joukowski_inverse:
        return "joukowski-inverse";
    case MapFunction::cross:
        return "cross";
    default:
        return to_string(static_cast<FunctionId>(static_cast<int>(fn)));
    }
}

MapFunction to_map_function(FunctionId fn) noexcept {
    return static_cast<MapFunction>(static_cast<int>(fn));
}

MapFunction parse_map_function(std::string_view name) {
    if (name == "joukowski-inverse") {
        return MapFunction::joukowski_inverse;
    }
    if (name == "cross") {
        return MapFunction::cross;
    }
    try {
        return to_map_function(parse_function(name));
    } catch (const UsageError&) {
        throw UsageError("unknown map function '" + std::string(name) + "'");
    }
}

template <IeeeFloat T>
SignedComplex<T> map_eval(MapFunction fn, SignedComplex<T> z) {
    switch (fn) {
    case MapFunction::joukowski_inverse:
        return joukowski_inverse(z);
    case MapFunction::cross:
        return cross_map(z);
    default:
        return builtin_eval(static_cast<FunctionId>(static_cast<int>(fn)), z);
    }
}

template <IeeeFloat T>
std::vector<CurveTrace<T>> trace_cuts(MapFunction fn, int n, const TraceOptions& options) {
    if (n < 2) {
        throw UsageError("trace_cuts needs at least 2 samples per side");
    }
    if (!(options.inner > 0) || !std::isfinite(options.extent)) {
        throw UsageError("trace extents must be finite and positive");
    }
    const double extent = options.extent;
    std::vector<CurveTrace<T>> out;
    int labels = 0;

    auto ray = [&](double lo) {
        if (!(extent > lo)) {
            throw UsageError("extent must exceed the cut endpoint " + std::to_string(lo));
        }
        return logspace<T>(lo, extent, n);
    };
    auto real_pair = [&](const std::string& name, const std::vector<T>& ts, double sign) {
        out.push_back(make_trace<T>(fn, name + "-top", ts, real_cut_point<T>, false, sign, labels));
        out.push_back(make_trace<T>(fn, name + "-bottom", ts, real_cut_point<T>, true, sign, labels));
    };
    auto imag_pair = [&](const std::string& name, const std::vector<T>& ts, double sign) {
        out.push_back(make_trace<T>(fn, name + "-right", ts, imag_cut_point<T>, false, sign, labels));
        out.push_back(make_trace<T>(fn, name + "-left", ts, imag_cut_point<T>, true, sign, labels));
    };

    switch (fn) {
    case MapFunction::log:
    case MapFunction::sqrt:
        real_pair("neg", ray(options.inner), -1);
        break;
    case MapFunction::asin:
    case MapFunction::acos:
    case MapFunction::atanh:
        real_pair("neg", ray(1), -1);
        real_pair("pos", ray(1), 1);
        break;
    case MapFunction::atan:
    case MapFunction::asinh:
        imag_pair("pos", ray(1), 1);
        imag_pair("neg", ray(1), -1);
        break;
    case MapFunction::acosh: {
        // t = -x runs from -1 (x = 1) through 1 (x = -1) out to the extent.
        std::vector<T> ts = linspace<T>(-1, 1, n);
        const std::vector<T> tail = ray(1);
        ts.insert(ts.end(), tail.begin() + 1, tail.end());
        real_pair("cut", ts, -1);
        break;
    }
    case MapFunction::joukowski_inverse:
        real_pair("cut", linspace<T>(-2, 2, n), 1);
        break;
    case MapFunction::cross:
        real_pair("pos", ray(2), 1);
        real_pair("neg", ray(2), -1);
        imag_pair("pos", ray(2), 1);
        imag_pair("neg", ray(2), -1);
        break;
    }
    return out;
}

template <IeeeFloat T>
GridResult<T> map_grid(MapFunction fn, const GridSpec& spec) {
    for (double v : {spec.x_min, spec.x_max, spec.y_min, spec.y_max}) {
        if (!std::isfinite(v)) {
            throw UsageError("grid ranges must be finite");
        }
    }
    if (spec.nx < 2 || spec.ny < 2 || spec.samples_per_line < 2) {
        throw UsageError("grid counts must be at least 2");
    }
    GridResult<T> result;

    auto run_line = [&](const std::string& base, const std::vector<SignedComplex<T>>& zs, const std::vector<T>& ts) {
        int segment = 0;
        CurveTrace<T> current;
        bool has_prev = false;
        SignedComplex<T> prev{};
        auto flush = [&] {
            if (!current.samples.empty()) {
                current.curve_id = "grid:" + base + "." + std::to_string(segment++);
                result.curves.push_back(std::move(current));
                current = {};
            }
        };
        for (std::size_t i = 0; i < zs.size(); ++i) {
            const SignedComplex<T> z = zs[i];
            std::optional<SignedComplex<T>> w;
            try {
                w = map_eval(fn, z);
                if (!std::isfinite(w->re) || !std::isfinite(w->im)) {
                    w.reset();
                }
            } catch (const PoleError&) {
            } catch (const NanInputError&) {
            }
            if (!w) {
                ++result.dropped;
                flush();
                has_prev = false;
                continue;
            }
            if (has_prev && crosses_cut(fn, prev, z)) {
                flush();
            }
            current.samples.push_back({ts[i], z, *w, {}});
            prev = z;
            has_prev = true;
        }
        flush();
    };

    const std::vector<T> xs = linspace<T>(spec.x_min, spec.x_max, spec.samples_per_line);
    const std::vector<T> ys = linspace<T>(spec.y_min, spec.y_max, spec.samples_per_line);
    const std::vector<T> row_ys = linspace<T>(spec.y_min, spec.y_max, spec.ny);
    const std::vector<T> col_xs = linspace<T>(spec.x_min, spec.x_max, spec.nx);

    for (std::size_t j = 0; j < row_ys.size(); ++j) {
        std::vector<SignedComplex<T>> zs;
        for (T x : xs) {
            zs.push_back({x, row_ys[j]});
        }
        run_line("h" + std::to_string(j), zs, xs);
    }
    for (std::size_t i = 0; i < col_xs.size(); ++i) {
        std::vector<SignedComplex<T>> zs;
        for (T y : ys) {
            zs.push_back({col_xs[i], y});
        }
        run_line("v" + std::to_string(i), zs, ys);
    }
    return result;
}

template <IeeeFloat T>
std::string shortest_decimal(T v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <IeeeFloat T>
T parse_decimal(std::string_view text) {
    T v{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ParseError("bad decimal '" + std::string(text) + "'");
    }
    return v;
}

template <IeeeFloat T>
std::string emit_csv(const std::vector<CurveTrace<T>>& traces) {
    std::ostringstream out;
    out << "curve,label,t,z_re,z_im,w_re,w_im\n";
    for (const CurveTrace<T>& tr : traces) {
        for (const TraceSample<T>& s : tr.samples) {
            out << tr.curve_id << ',' << s.label << ',' << shortest_decimal(s.t) << ',' << shortest_decimal(s.z.re)
                << ',' << shortest_decimal(s.z.im) << ',' << shortest_decimal(s.w.re) << ','
                << shortest_decimal(s.w.im) << '\n';
        }
    }
    return out.str();
}

#define CCBENCH_INSTANTIATE_MAPPER(T)                                                                  \
    template SignedComplex<T> map_eval<T>(MapFunction, SignedComplex<T>);                              \
    template std::vector<CurveTrace<T>> trace_cuts<T>(MapFunction, int, const TraceOptions&);          \
    template GridResult<T> map_grid<T>(MapFunction, const GridSpec&);                                  \
    template std::string emit_csv<T>(const std::vector<CurveTrace<T>>&);                               \
    template std::string shortest_decimal<T>(T);                                                       \
    template T parse_decimal<T>(std::string_view);

CCBENCH_INSTANTIATE_MAPPER(float)
CCBENCH_INSTANTIATE_MAPPER(double)
#if CCBENCH_HAS_BINARY128
CCBENCH_INSTANTIATE_MAPPER(binary128_t)
#endif

#undef CCBENCH_INSTANTIATE_MAPPER

}  // namespace ccbench
