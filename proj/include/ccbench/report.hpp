#pragma once

// Renderers for suite results: the symbol table (human-facing),
// CSV and JSON (machine-facing, stable field order), and a one-line summary.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ccbench/suite.hpp"

namespace ccbench {

/// Column order of the CSV schema.
inline constexpr std::array<std::string_view, 7> csv_columns{
    "case_id", "function", "input_re_hex", "input_im_hex", "actual_re_hex", "actual_im_hex", "failures",
};

/// One row per case grouped by function, "·" for a pass, footer "Pass rate N/D".
std::string render_table(const SuiteRun& run);

/// Header line plus one row per case. The failures field is empty for a
/// pass and "x" for an unsupported row, whose actual fields are empty.
std::string render_csv(const std::vector<CaseResult>& results);

/// Reads render_csv output back. Precision is not part of the schema and is
/// inferred from the hex width. Throws ParseError.
std::vector<CaseResult> parse_csv(std::string_view text);

/// {"precision", "provider", "mode", "passed", "denominator", "results": [...]}
/// where each result carries the CSV fields.
std::string render_json(const SuiteRun& run);

struct Summary {
    PassRate rate;
    std::array<int, failure_count> letter_counts{};
    bool empty = false;  ///< warning status: nothing was run
};

Summary summarize(const std::vector<CaseResult>& results);

/// "N/D" followed by per-letter counts, e.g. "68/70 m=1 s=2".
std::string summary(const std::vector<CaseResult>& results);

}  // namespace ccbench
