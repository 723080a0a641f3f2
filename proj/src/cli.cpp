#include "ccbench/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "ccbench/mapper.hpp"
#include "ccbench/report.hpp"

namespace ccbench {

namespace {

struct RunOptions {
    std::string precision = "binary64";
    std::string provider = "builtin";
    std::string mode = "paper";
    std::string format = "text";
    std::string out_path;
    double timeout_secs = 0;  // 0: default / environment
};

struct MapOptions {
    std::string function;
    std::string precision = "binary64";
    int samples = 33;
    double inner = TraceOptions{}.inner;
    double extent = TraceOptions{}.extent;
    bool grid = false;
    std::string out_path;
};

// Writes to --out when given, else to `fallback`.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        fallback.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file) {
        throw UsageError("failed writing '" + path + "'");
    }
}

std::string render(const SuiteRun& run, const std::string& format) {
    if (format == "csv") {
        return render_csv(run.results);
    }
    if (format == "json") {
        return render_json(run);
    }
    return render_table(run);
}

int do_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    const Precision prec = parse_precision(opt.precision);
    const Mode mode = parse_mode(opt.mode);
    const auto timeout = opt.timeout_secs > 0
                             ? std::chrono::milliseconds(static_cast<long long>(opt.timeout_secs * 1000.0))
                             : default_timeout();
    const auto provider = make_provider(opt.provider, timeout);
    SuiteRun run;
    try {
        run = run_suite(*provider, prec, mode);
    } catch (const RunError& e) {
        err << "ccbench: " << e.what() << '\n';
        emit(opt.out_path, render(e.partial(), opt.format), out);
        return exit_usage_or_protocol;
    }
    emit(opt.out_path, render(run, opt.format), out);
    err << "ccbench: " << summary(run.results) << '\n';
    const bool all_pass = run.rate.denominator > 0 && run.rate.passed == run.rate.denominator;
    return all_pass ? exit_ok : exit_failures;
}

template <IeeeFloat T>
std::string map_csv(const MapOptions& opt, std::ostream& err) {
    const MapFunction fn = parse_map_function(opt.function);
    std::vector<CurveTrace<T>> traces = trace_cuts<T>(fn, opt.samples, TraceOptions{opt.inner, opt.extent});
    if (opt.grid) {
        GridResult<T> grid = map_grid<T>(fn, GridSpec{});
        if (grid.dropped > 0) {
            err << "ccbench: dropped " << grid.dropped << " grid samples at poles\n";
        }
        for (auto& c : grid.curves) {
            traces.push_back(std::move(c));
        }
    }
    return emit_csv(traces);
}

int do_map(const MapOptions& opt, std::ostream& out, std::ostream& err) {
    const Precision prec = parse_precision(opt.precision);
    const std::string csv = dispatch_precision(prec, [&](auto tag) { return map_csv<decltype(tag)>(opt, err); });
    emit(opt.out_path, csv, out);
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branch-cut conformance harness for complex elementary functions", "ccbench"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run the 70-case branch-cut suite against a provider");
    run->add_option("--precision", run_opt.precision, "binary32 | binary64 | binary128")
        ->capture_default_str();
    run->add_option("--provider", run_opt.provider, "builtin | cmd:<command line>")->capture_default_str();
    run->add_option("--mode", run_opt.mode, "paper | strict")
        ->check(CLI::IsMember({"paper", "strict"}))
        ->capture_default_str();
    run->add_option("--format", run_opt.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    run->add_option("--out", run_opt.out_path, "Output file (default: standard output)");
    run->add_option("--timeout", run_opt.timeout_secs, "Per-evaluation timeout in seconds")
        ->check(CLI::PositiveNumber);

    MapOptions map_opt;
    CLI::App* map = app.add_subcommand("map", "Emit conformal-map traces of branch cuts as CSV");
    map->add_option("--function", map_opt.function,
                    "log | sqrt | asin | acos | atan | asinh | acosh | atanh | joukowski-inverse | cross")
        ->required();
    map->add_option("--precision", map_opt.precision, "binary32 | binary64 | binary128")->capture_default_str();
    map->add_option("--samples", map_opt.samples, "Samples per cut side")->capture_default_str();
    map->add_option("--inner", map_opt.inner, "Inner end of the log/sqrt ray")->capture_default_str();
    map->add_option("--extent", map_opt.extent, "Far end of every cut ray")->capture_default_str();
    map->add_flag("--grid", map_opt.grid, "Also emit images of a grid over [-4, 4]^2");
    map->add_option("--out", map_opt.out_path, "Output file (default: standard output)");

    CLI::App* serve_cmd = app.add_subcommand("serve-protocol", "Serve the builtin provider over standard streams");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("ccbench");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "ccbench: " << e.what() << '\n';
        return exit_usage_or_protocol;
    }

    try {
        if (run->parsed()) {
            return do_run(run_opt, out, err);
        }
        if (map->parsed()) {
            return do_map(map_opt, out, err);
        }
        if (serve_cmd->parsed()) {
            return serve_builtin(in, out, err) == 0 ? exit_ok : exit_usage_or_protocol;
        }
    } catch (const Error& e) {
        err << "ccbench: " << e.what() << '\n';
        return exit_usage_or_protocol;
    }
    return exit_usage_or_protocol;
}

}  // namespace ccbench
