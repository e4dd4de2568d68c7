#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "idstat/report.hpp"

using namespace idstat;

namespace {

ReportRow sample_row() {
  ReportRow row;
  row.project = "checkstyle";
  row.version = "5.1";
  row.language = "Java";
  row.pascal = 987;
  row.camel = 7171;
  row.hungarian = 22;
  row.underline = 22;
  row.capital = 469;
  row.total_ids = 9328;
  row.total_loc = 51265;
  row.total_files = 767;
  return row;
}

constexpr const char* kHeader =
    "project,version,language,pascal,camel,hungarian,underline,capital,total_ids,total_loc,"
    "total_files";

}  // namespace

TEST_CASE("csv output uses the fixed column order") {
  const std::string csv = write_rows({sample_row()}, RowFormat::Csv);
  CHECK(csv == std::string(kHeader) + "\n" +
                   "checkstyle,5.1,Java,987,7171,22,22,469,9328,51265,767\n");
}

TEST_CASE("empty row lists serialize to a header-only csv and an empty jsonl") {
  CHECK(write_rows({}, RowFormat::Csv) == std::string(kHeader) + "\n");
  CHECK(write_rows({}, RowFormat::Jsonl).empty());
}

TEST_CASE("jsonl keeps the field order and parses back") {
  const std::string jsonl = write_rows({sample_row()}, RowFormat::Jsonl);
  CHECK(jsonl.starts_with("{\"project\":\"checkstyle\",\"version\":\"5.1\",\"language\":"
                          "\"Java\",\"pascal\":987,"));
  CHECK(jsonl.ends_with("\n"));
  auto rows = read_rows(jsonl, RowFormat::Jsonl);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == sample_row());
}

TEST_CASE("csv fields with separators and quotes are quoted") {
  ReportRow row = sample_row();
  row.project = "weird, \"name\"";
  row.version = "line\nbreak";
  const std::string csv = write_rows({row}, RowFormat::Csv);
  CHECK(csv.find("\"weird, \"\"name\"\"\"") != std::string::npos);
  auto rows = read_rows(csv, RowFormat::Csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == row);
}

TEST_CASE("property: rows round-trip through both formats") {
  std::mt19937 rng(11u);
  std::uniform_int_distribution<std::uint64_t> count(0, 10'000'000);
  std::uniform_int_distribution<int> charpick(0, 127);
  auto random_text = [&](int max_len) {
    std::string s;
    const int n = static_cast<int>(count(rng) % (max_len + 1));
    for (int i = 0; i < n; ++i) {
      static const char pool[] = "abcXYZ019 ,\";'\n()_-+.";
      const int idx = charpick(rng) % static_cast<int>(sizeof(pool));  // one past: UTF-8 pair
      if (idx == sizeof(pool) - 1)
        s += "\xC3\xA9";
      else
        s += pool[idx];
    }
    return s;
  };
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<ReportRow> rows;
    const int n = static_cast<int>(count(rng) % 4);
    for (int i = 0; i < n; ++i) {
      ReportRow row;
      row.project = random_text(12);
      row.version = random_text(6);
      row.language = (i % 2) != 0 ? "C++" : "Java";
      row.pascal = count(rng);
      row.camel = count(rng);
      row.hungarian = count(rng);
      row.underline = count(rng);
      row.capital = count(rng);
      row.total_ids = count(rng);
      row.total_loc = count(rng);
      row.total_files = count(rng);
      rows.push_back(std::move(row));
    }
    for (RowFormat format : {RowFormat::Csv, RowFormat::Jsonl}) {
      const std::string bytes = write_rows(rows, format);
      CHECK(read_rows(bytes, format) == rows);
      CHECK(write_rows(rows, format) == bytes);  // byte stability
    }
  }
}

TEST_CASE("read_rows rejects malformed input") {
  CHECK_THROWS_AS(read_rows("", RowFormat::Csv), std::runtime_error);
  CHECK_THROWS_AS(read_rows("wrong,header\n", RowFormat::Csv), std::runtime_error);
  CHECK_THROWS_AS(read_rows(std::string(kHeader) + "\nonly,three,fields\n", RowFormat::Csv),
                  std::runtime_error);
  CHECK_THROWS_AS(
      read_rows(std::string(kHeader) + "\np,v,C,x,0,0,0,0,0,0,0\n", RowFormat::Csv),
      std::runtime_error);
  CHECK_THROWS_AS(read_rows("{not json\n", RowFormat::Jsonl), std::runtime_error);
  CHECK_THROWS_AS(read_rows("{\"project\":\"p\"}\n", RowFormat::Jsonl), std::runtime_error);
}

TEST_CASE("format_percent rounds half up on exact integer arithmetic") {
  CHECK(format_percent(1119505, 1261940, 2) == "88.71%");
  CHECK(format_percent(1478234, 1762233, 2) == "83.88%");
  CHECK(format_percent(1188894, 1294165, 2) == "91.87%");
  CHECK(format_percent(2466, 2986, 2) == "82.59%");
  CHECK(format_percent(1, 8, 2) == "12.50%");
  CHECK(format_percent(1, 800, 2) == "0.13%");  // 0.125 rounds up
  CHECK(format_percent(0, 5, 2) == "0.00%");
  CHECK(format_percent(5, 5, 2) == "100.00%");
  CHECK(format_percent(1, 3, 0) == "33%");
  CHECK(format_percent(2466, 2986, 4) == "82.5854%");
  CHECK_THROWS_AS(format_percent(1, 0, 2), std::domain_error);
}

TEST_CASE("format_fixed is locale independent") {
  CHECK(format_fixed(1.2746, 2) == "1.27");
  CHECK(format_fixed(0.5, 2) == "0.50");
  CHECK(format_fixed(2.0, 2) == "2.00");
}

TEST_CASE("render_summary prints the four tables") {
  CorpusSummary c;
  c.language = Language::C;
  c.totals.pascal = 29710;
  c.totals.camel = 535132;
  c.totals.hungarian = 5072;
  c.totals.underline = 502930;
  c.totals.capital = 46661;
  c.totals.total_ids = 1261940;
  c.match_ratio = match_ratio(c.totals);
  c.distribution = distribution(c.totals);
  c.popularity = popularity_order(c.totals);
  c.project_cvs = {{"haproxy", project_cv(ConventionCounts{0, 137, 0, 87, 0, 276})}};
  c.cv_average = c.project_cvs[0].cv.cv;

  const std::string text = render_summary({c});
  CHECK(text.find("88.71%") != std::string::npos);   // match ratio cell
  CHECK(text.find("42.41%") != std::string::npos);   // camel share of all identifiers
  CHECK(text.find("1119505") != std::string::npos);  // matched row
  CHECK(text.find("Camel") != std::string::npos);
  CHECK(text.find("haproxy") != std::string::npos);
  CHECK(text.find("1.27") != std::string::npos);
  CHECK(text.find("Average") != std::string::npos);

  // stable output
  CHECK(render_summary({c}) == text);
}

TEST_CASE("render_summary with no data prints a placeholder") {
  CHECK(render_summary({}) == "no data\n");
}

TEST_CASE("render_summary lays out one column set per language") {
  auto make = [](Language lang, ConventionCounts counts, const char* project) {
    CorpusSummary s;
    s.language = lang;
    s.totals = counts;
    s.match_ratio = match_ratio(counts);
    s.distribution = distribution(counts);
    s.popularity = popularity_order(counts);
    s.project_cvs = {{project, project_cv(counts)}};
    s.cv_average = s.project_cvs[0].cv.cv;
    return s;
  };
  const auto text = render_summary({
      make(Language::C, ConventionCounts{0, 137, 0, 87, 0, 276}, "haproxy"),
      make(Language::Java, ConventionCounts{320, 2466, 1, 0, 98, 2986}, "tiles"),
  });
  CHECK(text.find("C  ") != std::string::npos);
  CHECK(text.find("Java") != std::string::npos);
  CHECK(text.find("81.16%") != std::string::npos);  // 224/276
  CHECK(text.find("96.62%") != std::string::npos);  // 2885/2986
  CHECK(text.find("haproxy") != std::string::npos);
  CHECK(text.find("tiles") != std::string::npos);
  CHECK(text.find("1.27") != std::string::npos);  // haproxy cv
  CHECK(text.find("1.65") != std::string::npos);  // tiles cv
}
