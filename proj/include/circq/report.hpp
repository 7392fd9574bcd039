#pragma once

#include <string>
#include <string_view>

#include "circq/scan.hpp"

namespace circq {

enum class ReportFormat { json, csv };

/// "json" or "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_format(std::string_view name);

/// Single object {meta, points, summary}, fixed key order, shortest
/// round-trip doubles, skipped checks as null. Newline terminated.
std::string to_json(const Report& report);
Report report_from_json(std::string_view text);

/// One header row plus one row per point; skipped checks are empty cells.
std::string to_csv(const Report& report);

std::string serialize(const Report& report, ReportFormat format);

} // namespace circq
