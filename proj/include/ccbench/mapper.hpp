#pragma once

// Conformal-map traces: images of branch-cut boundaries (both sides, told
// apart by the sign of the zero coordinate) and of grid lines, as plot-ready
// CSV.

#include <string>
#include <string_view>
#include <vector>

#include "ccbench/function_id.hpp"

namespace ccbench {

enum class MapFunction { log, sqrt, asin, acos, atan, asinh, acosh, atanh, joukowski_inverse, cross };

std::string_view to_string(MapFunction fn) noexcept;
/// Accepts the eight function names plus "joukowski-inverse" and "cross".
/// Throws UsageError.
MapFunction parse_map_function(std::string_view name);
MapFunction to_map_function(FunctionId fn) noexcept;

template <IeeeFloat T>
SignedComplex<T> map_eval(MapFunction fn, SignedComplex<T> z);

template <IeeeFloat T>
struct TraceSample {
    T t{};
    SignedComplex<T> z;
    SignedComplex<T> w;
    std::string label;
};

template <IeeeFloat T>
struct CurveTrace {
    std::string curve_id;
    std::vector<TraceSample<T>> samples;
};

struct TraceOptions {
    double inner = 1.0 / 16;  ///< lower end of the log/sqrt ray, which reaches 0
    double extent = 4;        ///< far end of every ray
};

/// Two traces per cut (one per side). Rays are log-spaced from the cut's
/// finite endpoint to `extent`; the segments [-1, 1] of acosh and [-2, 2] of
/// the Joukowski inverse are linear. The first, middle and last sample of
/// each trace carry labels A, B, C, ... Throws UsageError for n < 2 or bad
/// extents.
template <IeeeFloat T>
std::vector<CurveTrace<T>> trace_cuts(MapFunction fn, int n, const TraceOptions& options = {});

struct GridSpec {
    double x_min = -4;
    double x_max = 4;
    double y_min = -4;
    double y_max = 4;
    int nx = 9;                 ///< vertical lines
    int ny = 9;                 ///< horizontal lines
    int samples_per_line = 65;
};

template <IeeeFloat T>
struct GridResult {
    std::vector<CurveTrace<T>> curves;
    int dropped = 0;  ///< samples at poles or with non-finite images
};

/// Images of horizontal and vertical grid lines. A line is split into
/// separate curves where it crosses a cut or loses a sample.
/// Throws UsageError for non-finite ranges or counts below 2.
template <IeeeFloat T>
GridResult<T> map_grid(MapFunction fn, const GridSpec& spec);

/// Columns curve,label,t,z_re,z_im,w_re,w_im with shortest round-trip decimals.
template <IeeeFloat T>
std::string emit_csv(const std::vector<CurveTrace<T>>& traces);

/// Shortest decimal that reads back to the same value ("-0" keeps its sign).
template <IeeeFloat T>
std::string shortest_decimal(T v);

/// Inverse of shortest_decimal. Throws ParseError.
template <IeeeFloat T>
T parse_decimal(std::string_view text);

}  // namespace ccbench
