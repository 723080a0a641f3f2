#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "ccbench/mapper.hpp"
#include "ccbench/report.hpp"

namespace py = pybind11;
using namespace ccbench;

namespace {

std::pair<double, double> eval_as_double(FunctionId fn, double re, double im, const std::string& precision) {
    return dispatch_precision(parse_precision(precision), [&](auto tag) {
        using T = decltype(tag);
        const SignedComplex<T> w = builtin_eval<T>(fn, {static_cast<T>(re), static_cast<T>(im)});
        return std::make_pair(static_cast<double>(w.re), static_cast<double>(w.im));
    });
}

py::dict result_to_dict(const CaseResult& r) {
    py::dict d;
    d["case_id"] = r.case_id;
    d["function"] = std::string(to_string(r.function));
    d["input_re_hex"] = r.input_re_hex;
    d["input_im_hex"] = r.input_im_hex;
    d["actual_re_hex"] = r.actual ? r.actual->first : std::string();
    d["actual_im_hex"] = r.actual ? r.actual->second : std::string();
    d["failures"] = r.failures.letters();
    d["symbol"] = r.failures.symbol();
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ccbench, m) {
    m.doc() = "Branch-cut-correct complex elementary functions and their conformance suite";

    auto base = py::register_exception<Error>(m, "CcbenchError");
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<NanInputError>(m, "NanInputError", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<CapabilityError>(m, "CapabilityError", base);
    py::register_exception<PoleError>(m, "PoleError", base);
    auto protocol = py::register_exception<ProtocolError>(m, "ProtocolError", base);
    py::register_exception<VersionError>(m, "VersionError", protocol);
    py::register_exception<TimeoutError>(m, "TimeoutError", protocol);
    py::register_exception<UsageError>(m, "UsageError", base);

    m.def("supported_precisions", [] {
        std::vector<std::string> out;
        for (Precision p : supported_precisions()) {
            out.emplace_back(to_string(p));
        }
        return out;
    });

    m.def(
        "evaluate",
        [](const std::string& function, double re, double im, const std::string& precision) {
            return eval_as_double(parse_function(function), re, im, precision);
        },
        py::arg("function"), py::arg("re"), py::arg("im"), py::arg("precision") = "binary64",
        "Evaluate one of log, sqrt, asin, acos, atan, asinh, acosh, atanh. Inputs are rounded to the precision.");

    m.def(
        "evaluate_bits",
        [](const std::string& function, const std::string& precision, const std::string& re_hex,
           const std::string& im_hex) {
            BuiltinProvider provider;
            const EvalResponse resp =
                provider.evaluate(EvalRequest{parse_function(function), parse_precision(precision), re_hex, im_hex});
            if (resp.kind == EvalResponse::Kind::unsupported) {
                throw CapabilityError("precision " + precision + " is not supported on this platform");
            }
            if (resp.kind == EvalResponse::Kind::error) {
                throw ParseError(resp.message);
            }
            return std::make_pair(resp.re_hex, resp.im_hex);
        },
        py::arg("function"), py::arg("precision"), py::arg("re_hex"), py::arg("im_hex"),
        "Bit-exact evaluation on hex bit patterns, as on the wire.");

    m.def(
        "classify",
        [](double v, const std::string& precision) {
            return dispatch_precision(parse_precision(precision), [&](auto tag) {
                using T = decltype(tag);
                return std::string(to_string(classify(static_cast<T>(v))));
            });
        },
        py::arg("value"), py::arg("precision") = "binary64");

    m.def(
        "encode_bits",
        [](double v, const std::string& precision) {
            return dispatch_precision(parse_precision(precision),
                                      [&](auto tag) { return encode_bits(static_cast<decltype(tag)>(v)); });
        },
        py::arg("value"), py::arg("precision") = "binary64");

    m.def(
        "decode_bits",
        [](const std::string& hex, const std::string& precision) {
            return dispatch_precision(parse_precision(precision), [&](auto tag) {
                return static_cast<double>(decode_bits<decltype(tag)>(hex));
            });
        },
        py::arg("hex"), py::arg("precision") = "binary64");

    m.def(
        "ulp_distance",
        [](double a, double b, const std::string& precision) {
            return dispatch_precision(parse_precision(precision), [&](auto tag) {
                using T = decltype(tag);
                return static_cast<unsigned long long>(ulp_distance(static_cast<T>(a), static_cast<T>(b)));
            });
        },
        py::arg("a"), py::arg("b"), py::arg("precision") = "binary64");

    m.def(
        "format_params",
        [](const std::string& precision) {
            return dispatch_precision(parse_precision(precision), [](auto tag) {
                const auto p = format_params<decltype(tag)>();
                py::dict d;
                d["h"] = static_cast<double>(p.h);
                d["t"] = static_cast<double>(p.t);
                d["eps"] = static_cast<double>(p.eps);
                d["log2h"] = static_cast<double>(p.log2h);
                return d;
            });
        },
        py::arg("precision") = "binary64");

    m.def(
        "case_ids", [](const std::string& precision) { return suite_case_ids(parse_precision(precision)); },
        py::arg("precision") = "binary64");

    m.def(
        "run_suite",
        [](const std::string& provider, const std::string& precision, const std::string& mode) {
            const auto prov = make_provider(provider);
            const SuiteRun run = run_suite(*prov, parse_precision(precision), parse_mode(mode));
            py::list rows;
            for (const CaseResult& r : run.results) {
                rows.append(result_to_dict(r));
            }
            py::dict d;
            d["precision"] = std::string(to_string(run.precision));
            d["provider"] = run.provider;
            d["mode"] = std::string(to_string(run.mode));
            d["passed"] = run.rate.passed;
            d["denominator"] = run.rate.denominator;
            d["results"] = rows;
            d["table"] = render_table(run);
            d["csv"] = render_csv(run.results);
            d["json"] = render_json(run);
            return d;
        },
        py::arg("provider") = "builtin", py::arg("precision") = "binary64", py::arg("mode") = "paper",
        "Run the 70-case suite. Returns pass rate, per-case rows and the rendered reports.");

    m.def(
        "joukowski_inverse",
        [](double re, double im) {
            const auto w = ccbench::joukowski_inverse<double>({re, im});
            return std::make_pair(w.re, w.im);
        },
        py::arg("re"), py::arg("im"));

    m.def(
        "joukowski",
        [](double re, double im) {
            const auto z = ccbench::joukowski<double>({re, im});
            return std::make_pair(z.re, z.im);
        },
        py::arg("re"), py::arg("im"));

    m.def(
        "cross_map",
        [](double re, double im) {
            const auto w = ccbench::cross_map<double>({re, im});
            return std::make_pair(w.re, w.im);
        },
        py::arg("re"), py::arg("im"));

    m.def(
        "trace_cuts_csv",
        [](const std::string& function, int samples, const std::string& precision) {
            const MapFunction fn = parse_map_function(function);
            return dispatch_precision(parse_precision(precision), [&](auto tag) {
                return emit_csv(trace_cuts<decltype(tag)>(fn, samples));
            });
        },
        py::arg("function"), py::arg("samples") = 33, py::arg("precision") = "binary64",
        "Cut-boundary traces as CSV (curve,label,t,z_re,z_im,w_re,w_im).");
}
