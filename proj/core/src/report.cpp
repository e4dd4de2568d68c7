#include "idstat/report.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace idstat {
namespace {

constexpr std::string_view kFieldNames[] = {
    "project",   "version", "language",  "pascal",    "camel",      "hungarian",
    "underline", "capital", "total_ids", "total_loc", "total_files"};

std::string csv_header() {
  std::string out;
  for (std::string_view field : kFieldNames) {
    if (!out.empty()) out += ',';
    out += field;
  }
  return out;
}

void append_csv_field(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

// RFC 4180 record splitter; quoted fields may contain commas, doubled quotes
// and newlines. Accepts LF and CRLF endings.
std::vector<std::vector<std::string>> parse_csv(std::string_view data) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;
  const std::size_t n = data.size();
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };
  while (i < n) {
    char c = data[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && data[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        continue;
      }
      field += c;
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw std::runtime_error("CSV: quote inside unquoted field");
        in_quotes = true;
        field_started = true;
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        ++i;
        break;
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field += c;
        field_started = true;
        ++i;
        break;
    }
  }
  if (in_quotes) throw std::runtime_error("CSV: unterminated quoted field");
  if (field_started || !record.empty()) end_record();
  return records;
}

std::uint64_t parse_count(std::string_view text, std::string_view field, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::runtime_error("row " + std::to_string(line) + ": field '" + std::string(field) +
                             "' is not a non-negative integer: '" + std::string(text) + "'");
  return value;
}

std::vector<ReportRow> read_rows_csv(std::string_view data) {
  const auto records = parse_csv(data);
  if (records.empty()) throw std::runtime_error("CSV: missing header line");
  std::vector<std::string> expected;
  for (std::string_view field : kFieldNames) expected.emplace_back(field);
  if (records.front() != expected) throw std::runtime_error("CSV: unexpected header line");
  std::vector<ReportRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != std::size(kFieldNames))
      throw std::runtime_error("row " + std::to_string(r) + ": expected " +
                               std::to_string(std::size(kFieldNames)) + " fields, got " +
                               std::to_string(rec.size()));
    ReportRow row;
    row.project = rec[0];
    row.version = rec[1];
    row.language = rec[2];
    row.pascal = parse_count(rec[3], "pascal", r);
    row.camel = parse_count(rec[4], "camel", r);
    row.hungarian = parse_count(rec[5], "hungarian", r);
    row.underline = parse_count(rec[6], "underline", r);
    row.capital = parse_count(rec[7], "capital", r);
    row.total_ids = parse_count(rec[8], "total_ids", r);
    row.total_loc = parse_count(rec[9], "total_loc", r);
    row.total_files = parse_count(rec[10], "total_files", r);
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json row_to_json(const ReportRow& row) {
  nlohmann::ordered_json j;
  j["project"] = row.project;
  j["version"] = row.version;
  j["language"] = row.language;
  j["pascal"] = row.pascal;
  j["camel"] = row.camel;
  j["hungarian"] = row.hungarian;
  j["underline"] = row.underline;
  j["capital"] = row.capital;
  j["total_ids"] = row.total_ids;
  j["total_loc"] = row.total_loc;
  j["total_files"] = row.total_files;
  return j;
}

std::vector<ReportRow> read_rows_jsonl(std::string_view data) {
  std::vector<ReportRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < data.size()) {
    std::size_t eol = data.find('\n', pos);
    if (eol == std::string_view::npos) eol = data.size();
    std::string_view line = data.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("JSONL line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      ReportRow row;
      row.project = j.at("project").get<std::string>();
      row.version = j.at("version").get<std::string>();
      row.language = j.at("language").get<std::string>();
      row.pascal = j.at("pascal").get<std::uint64_t>();
      row.camel = j.at("camel").get<std::uint64_t>();
      row.hungarian = j.at("hungarian").get<std::uint64_t>();
      row.underline = j.at("underline").get<std::uint64_t>();
      row.capital = j.at("capital").get<std::uint64_t>();
      row.total_ids = j.at("total_ids").get<std::uint64_t>();
      row.total_loc = j.at("total_loc").get<std::uint64_t>();
      row.total_files = j.at("total_files").get<std::uint64_t>();
      rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("JSONL line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

// Plain-text grid with per-column alignment and a two-space gutter.
class TextTable {
 public:
  explicit TextTable(std::vector<bool> right_align) : right_align_(std::move(right_align)) {}

  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string render() const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const bool right = i < right_align_.size() && right_align_[i];
        std::string cell = row[i];
        if (cell.size() < widths[i]) {
          std::string pad(widths[i] - cell.size(), ' ');
          cell = right ? pad + cell : cell + pad;
        }
        if (i > 0) line += "  ";
        line += cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<bool> right_align_;
  std::vector<std::vector<std::string>> rows_;
};

std::string heading(std::string_view title) {
  std::string out(title);
  out += '\n';
  out += std::string(title.size(), '-');
  out += '\n';
  return out;
}

std::string totals_table(const std::vector<CorpusSummary>& summaries) {
  std::vector<bool> align(summaries.size() + 1, true);
  align[0] = false;
  TextTable table(align);
  std::vector<std::string> header{"Language"};
  for (const auto& s : summaries) header.emplace_back(language_name(s.language));
  table.add_row(std::move(header));
  for (Convention c : kReportOrder) {
    std::vector<std::string> row{std::string(convention_name(c))};
    for (const auto& s : summaries) row.push_back(std::to_string(s.totals.count_for(c)));
    table.add_row(std::move(row));
  }
  std::vector<std::string> matched{"matched"};
  std::vector<std::string> total{"total"};
  std::vector<std::string> ratio{"match ratio"};
  for (const auto& s : summaries) {
    matched.push_back(std::to_string(s.totals.matched()));
    total.push_back(std::to_string(s.totals.total_ids));
    ratio.push_back(format_percent(s.totals.matched(), s.totals.total_ids, 2));
  }
  table.add_row(std::move(matched));
  table.add_row(std::move(total));
  table.add_row(std::move(ratio));
  return heading("Totals and match ratio") + table.render();
}

std::string distribution_table(const std::vector<CorpusSummary>& summaries) {
  std::vector<bool> align(kMatchedConventionCount + 1, true);
  align[0] = false;
  TextTable table(align);
  std::vector<std::string> header{"Language"};
  for (Convention c : kReportOrder) header.emplace_back(convention_name(c));
  table.add_row(std::move(header));
  for (const auto& s : summaries) {
    std::vector<std::string> row{std::string(language_name(s.language))};
    for (Convention c : kReportOrder)
      row.push_back(format_percent(s.totals.count_for(c), s.totals.total_ids, 2));
    table.add_row(std::move(row));
  }
  return heading("Distribution of the five conventions (% of all identifiers)") + table.render();
}

std::string popularity_table(const std::vector<CorpusSummary>& summaries) {
  std::vector<bool> align(kMatchedConventionCount + 1, false);
  TextTable table(align);
  table.add_row({"Language", "1st", "2nd", "3rd", "4th", "5th"});
  bool any_tie = false;
  for (const auto& s : summaries) {
    std::vector<std::string> row{std::string(language_name(s.language))};
    for (std::size_t i = 0; i < s.popularity.order.size(); ++i) {
      std::string cell(convention_name(s.popularity.order[i]));
      if (s.popularity.tied[i]) {
        cell += '*';
        any_tie = true;
      }
      row.push_back(std::move(cell));
    }
    table.add_row(std::move(row));
  }
  std::string out = heading("Popularity order") + table.render();
  if (any_tie) out += "* shares its count with a neighbouring rank\n";
  return out;
}

std::string consistency_table(const std::vector<CorpusSummary>& summaries) {
  std::vector<bool> align(1 + 2 * summaries.size(), false);
  for (std::size_t i = 0; i < summaries.size(); ++i) align[2 + 2 * i] = true;
  TextTable table(align);
  std::vector<std::string> header{"No."};
  std::size_t max_rows = 0;
  for (const auto& s : summaries) {
    header.push_back(std::string(language_name(s.language)) + " project");
    header.emplace_back("CV");
    max_rows = std::max(max_rows, s.project_cvs.size());
  }
  table.add_row(std::move(header));
  for (std::size_t r = 0; r < max_rows; ++r) {
    std::vector<std::string> row{std::to_string(r + 1)};
    for (const auto& s : summaries) {
      if (r < s.project_cvs.size()) {
        row.push_back(s.project_cvs[r].project);
        row.push_back(format_fixed(s.project_cvs[r].cv.cv, 2));
      } else {
        row.emplace_back();
        row.emplace_back();
      }
    }
    table.add_row(std::move(row));
  }
  std::vector<std::string> avg{"Average"};
  for (const auto& s : summaries) {
    avg.emplace_back();
    avg.push_back(s.cv_average ? format_fixed(*s.cv_average, 2) : "-");
  }
  table.add_row(std::move(avg));
  return heading("Naming consistency (coefficient of variation per project)") + table.render();
}

}  // namespace

ReportRow to_row(const ProjectReport& report) {
  ReportRow row;
  row.project = report.project;
  row.version = report.version;
  row.language = std::string(language_name(report.language));
  row.pascal = report.counts.pascal;
  row.camel = report.counts.camel;
  row.hungarian = report.counts.hungarian;
  row.underline = report.counts.underline;
  row.capital = report.counts.capital;
  row.total_ids = report.counts.total_ids;
  row.total_loc = report.total_loc;
  row.total_files = report.total_files;
  return row;
}

std::string write_rows(const std::vector<ReportRow>& rows, RowFormat format) {
  std::string out;
  if (format == RowFormat::Csv) {
    out += csv_header();
    out += '\n';
    for (const ReportRow& row : rows) {
      append_csv_field(out, row.project);
      out += ',';
      append_csv_field(out, row.version);
      out += ',';
      append_csv_field(out, row.language);
      for (std::uint64_t value : {row.pascal, row.camel, row.hungarian, row.underline,
                                  row.capital, row.total_ids, row.total_loc, row.total_files}) {
        out += ',';
        out += std::to_string(value);
      }
      out += '\n';
    }
    return out;
  }
  for (const ReportRow& row : rows) {
    // invalid UTF-8 in project or version names degrades to U+FFFD
    out += row_to_json(row).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::vector<ReportRow> read_rows(std::string_view data, RowFormat format) {
  return format == RowFormat::Csv ? read_rows_csv(data) : read_rows_jsonl(data);
}

std::string render_summary(const std::vector<CorpusSummary>& summaries) {
  if (summaries.empty()) return "no data\n";
  std::string out = totals_table(summaries);
  out += '\n';
  out += distribution_table(summaries);
  out += '\n';
  out += popularity_table(summaries);
  out += '\n';
  out += consistency_table(summaries);
  out += '\n';
  out += "match ratio = matched identifiers / all identifiers; CV = population standard\n";
  out += "deviation over the five convention counts divided by their mean. LOC counts\n";
  out += "physical lines. classifier rules ";
  out += rule_set_version();
  out += "\n";
  return out;
}

std::string format_percent(std::uint64_t numerator, std::uint64_t denominator, int decimals) {
  if (denominator == 0) throw std::domain_error("percentage undefined: zero denominator");
  if (decimals < 0 || decimals > 9) throw std::invalid_argument("decimals out of range");
  std::uint64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  using u128 = unsigned __int128;
  const u128 scaled = static_cast<u128>(numerator) * 100u * pow10;
  u128 quotient = scaled / denominator;
  const u128 remainder = scaled % denominator;
  if (2 * remainder >= denominator) ++quotient;  // round half up
  if (quotient > static_cast<u128>(UINT64_MAX))
    throw std::overflow_error("percentage out of range");
  const std::uint64_t q = static_cast<std::uint64_t>(quotient);
  std::string out = std::to_string(q / pow10);
  if (decimals > 0) {
    std::string frac = std::to_string(q % pow10);
    out += '.';
    out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  out += '%';
  return out;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw std::invalid_argument("value not representable");
  return std::string(buf, ptr);
}

}  // namespace idstat
