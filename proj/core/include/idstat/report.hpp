#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idstat/corpus.hpp"
#include "idstat/stats.hpp"

namespace idstat {

enum class RowFormat { Csv, Jsonl };

/// Flat result record, one per project. Field order is fixed and shared by
/// the CSV header and the JSONL keys.
struct ReportRow {
  std::string project;
  std::string version;
  std::string language;  // display name: C, C++, Java
  std::uint64_t pascal = 0;
  std::uint64_t camel = 0;
  std::uint64_t hungarian = 0;
  std::uint64_t underline = 0;
  std::uint64_t capital = 0;
  std::uint64_t total_ids = 0;
  std::uint64_t total_loc = 0;
  std::uint64_t total_files = 0;

  bool operator==(const ReportRow&) const = default;
};

ReportRow to_row(const ProjectReport& report);

/// Serializes rows to CSV (RFC 4180 quoting, header line, LF endings) or to
/// JSON lines with the exact field names of ReportRow. Both end with a
/// trailing newline; byte-identical output for identical input.
std::string write_rows(const std::vector<ReportRow>& rows, RowFormat format);

/// Inverse of write_rows. Throws std::runtime_error on malformed input.
std::vector<ReportRow> read_rows(std::string_view data, RowFormat format);

/// Four aligned plain-text tables per language column: totals and match
/// ratio, convention distribution, popularity order, and per-project CV with
/// the language average. Returns a "no data" placeholder for an empty list.
std::string render_summary(const std::vector<CorpusSummary>& summaries);

/// Exact half-up percentage of numerator/denominator, e.g. (88713, 100000, 2)
/// -> "88.71%". Integer arithmetic throughout; throws std::domain_error when
/// the denominator is zero.
std::string format_percent(std::uint64_t numerator, std::uint64_t denominator, int decimals);

/// Locale-independent fixed-point formatting.
std::string format_fixed(double value, int decimals);

}  // namespace idstat
