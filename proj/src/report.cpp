#include "ccbench/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ccbench {

namespace {

Precision precision_from_width(std::size_t width) {
    for (Precision p : {Precision::binary32, Precision::binary64, Precision::binary128}) {
        if (static_cast<std::size_t>(hex_width(p)) == width) {
            return p;
        }
    }
    throw ParseError("hex field has no matching precision width");
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    for (char c : line) {
        if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    return fields;
}

}  // namespace

std::string render_table(const SuiteRun& run) {
    std::size_t width = 0;
    for (const CaseResult& r : run.results) {
        width = std::max(width, r.case_id.size());
    }
    width += 2;
    const std::string rule(width + 4, '-');

    std::ostringstream out;
    out << "provider " << run.provider << "  precision " << to_string(run.precision) << "  mode "
        << to_string(run.mode) << '\n';
    out << rule << '\n';
    for (std::size_t i = 0; i < run.results.size(); ++i) {
        const CaseResult& r = run.results[i];
        if (i > 0 && run.results[i - 1].function != r.function) {
            out << rule << '\n';
        }
        out << r.case_id << std::string(width - r.case_id.size(), ' ') << r.failures.symbol() << '\n';
    }
    out << rule << '\n';
    out << "Pass rate " << run.rate.passed << '/' << run.rate.denominator << '\n';
    return out.str();
}

std::string render_csv(const std::vector<CaseResult>& results) {
    std::ostringstream out;
    for (std::size_t i = 0; i < csv_columns.size(); ++i) {
        out << (i ? "," : "") << csv_columns[i];
    }
    out << '\n';
    for (const CaseResult& r : results) {
        out << r.case_id << ',' << to_string(r.function) << ',' << r.input_re_hex << ',' << r.input_im_hex << ',';
        if (r.actual) {
            out << r.actual->first << ',' << r.actual->second;
        } else {
            out << ',';
        }
        out << ',' << r.failures.letters() << '\n';
    }
    return out.str();
}

std::vector<CaseResult> parse_csv(std::string_view text) {
    std::vector<CaseResult> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != csv_columns.size()) {
            throw ParseError("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(csv_columns.size()));
        }
        if (header) {
            for (std::size_t i = 0; i < csv_columns.size(); ++i) {
                if (fields[i] != csv_columns[i]) {
                    throw ParseError("unexpected CSV header");
                }
            }
            header = false;
            continue;
        }
        CaseResult r;
        r.case_id = fields[0];
        try {
            r.function = parse_function(fields[1]);
        } catch (const UsageError& e) {
            throw ParseError(e.what());
        }
        r.input_re_hex = fields[2];
        r.input_im_hex = fields[3];
        r.precision = precision_from_width(r.input_re_hex.size());
        if (!fields[4].empty() || !fields[5].empty()) {
            r.actual = std::make_pair(fields[4], fields[5]);
        }
        r.failures = FailureSet::parse(fields[6]);
        r.unsupported = r.failures.contains(Failure::unsupported) && !r.actual;
        out.push_back(std::move(r));
    }
    if (header) {
        throw ParseError("CSV header missing");
    }
    return out;
}

std::string render_json(const SuiteRun& run) {
    nlohmann::ordered_json doc;
    doc["precision"] = to_string(run.precision);
    doc["provider"] = run.provider;
    doc["mode"] = to_string(run.mode);
    doc["passed"] = run.rate.passed;
    doc["denominator"] = run.rate.denominator;
    auto rows = nlohmann::ordered_json::array();
    for (const CaseResult& r : run.results) {
        nlohmann::ordered_json row;
        row["case_id"] = r.case_id;
        row["function"] = to_string(r.function);
        row["input_re_hex"] = r.input_re_hex;
        row["input_im_hex"] = r.input_im_hex;
        row["actual_re_hex"] = r.actual ? r.actual->first : "";
        row["actual_im_hex"] = r.actual ? r.actual->second : "";
        row["failures"] = r.failures.letters();
        if (!r.note.empty()) {
            row["note"] = r.note;
        }
        rows.push_back(std::move(row));
    }
    doc["results"] = std::move(rows);
    return doc.dump(2) + "\n";
}

Summary summarize(const std::vector<CaseResult>& results) {
    Summary s;
    s.rate = pass_rate(results);
    s.empty = results.empty();
    for (const CaseResult& r : results) {
        for (std::size_t i = 0; i < failure_count; ++i) {
            if (r.failures.contains(static_cast<Failure>(i))) {
                ++s.letter_counts[i];
            }
        }
    }
    return s;
}

std::string summary(const std::vector<CaseResult>& results) {
    const Summary s = summarize(results);
    std::string out = std::to_string(s.rate.passed) + "/" + std::to_string(s.rate.denominator);
    for (std::size_t i = 0; i < failure_count; ++i) {
        if (s.letter_counts[i] > 0) {
            out += ' ';
            out += failure_char(static_cast<Failure>(i));
            out += '=' + std::to_string(s.letter_counts[i]);
        }
    }
    if (s.empty) {
        out += " (warning: no results)";
    }
    return out;
}

}  // namespace ccbench
