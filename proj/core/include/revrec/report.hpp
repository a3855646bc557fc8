#pragma once

#include <filesystem>
#include <string>

#include "revrec/evaluation.hpp"

namespace revrec {

// Machine-readable form: '#'-prefixed `key=value` metadata lines, then a CSV
// table with header `method,k,topk_accuracy,mrr` and one row per
// (selection, k) in report order. Values use six decimals.
std::string format_report_csv(const EvalReport& report);

// Aligned text table, one line per selection with alternating Top-k / MRR
// columns for each k. The baseline row comes first; for incremental runs a
// per-step table follows.
std::string format_report_table(const EvalReport& report);

// Writes the CSV to `path` and the text table to `path` + ".txt".
void write_report(const EvalReport& report, const std::filesystem::path& path);

}  // namespace revrec
