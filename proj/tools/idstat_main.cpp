// idstat command line front end: scans a file, a project tree, or a corpus of
// project trees for one language, writes per-project result rows (CSV or JSON
// lines), and prints summary tables.
//
// Exit status: 0 success, 1 fatal configuration or I/O error, 2 scan finished
// but no file matched the language filter.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idstat/corpus.hpp"
#include "idstat/language_profile.hpp"
#include "idstat/report.hpp"
#include "idstat/stats.hpp"

namespace {

struct CliConfig {
  idstat::Language language = idstat::Language::C;
  idstat::ScanMode mode = idstat::ScanMode::SingleProject;
  std::filesystem::path input;
  std::filesystem::path out;  // empty: rows go to stdout
  idstat::RowFormat format = idstat::RowFormat::Csv;
  bool quiet = false;
  bool debug = false;
  bool detailed = false;
};

void emit_detail(const std::vector<idstat::ProjectReport>& reports) {
  for (const auto& report : reports) {
    for (const auto& file : report.files) {
      for (const auto& [name, record] : file.identifiers) {
        nlohmann::ordered_json j;
        j["project"] = report.project;
        j["file"] = file.path;
        j["name"] = name;
        j["convention"] = idstat::convention_name(report.identifiers.at(name).convention);
        j["occurrences"] = record.occurrences();
        j["lines"] = record.lines;
        std::cout << j.dump() << '\n';
      }
    }
  }
}

int run(const CliConfig& cfg) {
  const idstat::LanguageProfile& profile = idstat::profile_for(cfg.language);

  idstat::ScanOptions options;
  options.collect_detail = cfg.detailed && !cfg.quiet;
  if (cfg.debug)
    options.on_file = [](const std::filesystem::path& p) {
      std::cerr << "scanning " << p.string() << '\n';
    };

  std::vector<std::string> scan_warnings;
  std::vector<idstat::ProjectReport> reports;
  try {
    reports = idstat::scan_corpus(cfg.input, profile, cfg.mode, options, &scan_warnings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  for (const std::string& w : scan_warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& report : reports)
    for (const std::string& w : report.warnings) std::cerr << "warning: " << w << '\n';

  std::vector<idstat::ReportRow> rows;
  rows.reserve(reports.size());
  std::uint64_t total_files = 0;
  std::uint64_t total_ids = 0;
  for (const auto& report : reports) {
    rows.push_back(idstat::to_row(report));
    total_files += report.total_files;
    total_ids += report.counts.total_ids;
  }

  const std::string payload = idstat::write_rows(rows, cfg.format);
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream sink(cfg.out, std::ios::binary);
    if (!sink || !(sink << payload) || (sink.close(), sink.fail())) {
      std::cerr << "error: cannot write output file: " << cfg.out.string() << '\n';
      return 1;
    }
  }

  if (options.collect_detail) emit_detail(reports);

  if (total_ids > 0) {
    std::cout << idstat::render_summary({idstat::aggregate_language(reports)});
  } else {
    std::cout << idstat::render_summary({});
  }

  if (cfg.debug) std::cerr << "scanned " << total_files << " file(s)\n";
  return total_files == 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identifier naming convention scanner"};
  app.get_formatter()->column_width(26);

  std::string language;
  std::string mode = "project";
  std::string format = "csv";
  std::string input;
  std::string out;
  CliConfig cfg;

  app.add_option("--language", language, "source language: c, cpp or java")
      ->required()
      ->check(CLI::IsMember({"c", "cpp", "java"}));
  app.add_option("--mode", mode,
                 "file: scan one file; project: scan one project tree; "
                 "multi: each subdirectory of the input is a project")
      ->check(CLI::IsMember({"file", "project", "multi"}))
      ->capture_default_str();
  app.add_option("--input", input, "file or directory to scan")->required();
  app.add_option("--out", out, "write result rows to this file instead of stdout");
  app.add_option("--format", format, "row output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_flag("--quiet", cfg.quiet, "suppress per-identifier detail output");
  app.add_flag("--debug", cfg.debug, "log every scanned file to stderr");
  app.add_flag("--detailed", cfg.detailed,
               "emit one JSON line per identifier and file (name, convention, "
               "occurrences, line numbers)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  cfg.language = *idstat::parse_language(language);
  cfg.mode = mode == "file"      ? idstat::ScanMode::SingleFile
             : mode == "multi"   ? idstat::ScanMode::MultiProject
                                 : idstat::ScanMode::SingleProject;
  cfg.format = format == "jsonl" ? idstat::RowFormat::Jsonl : idstat::RowFormat::Csv;
  cfg.input = input;
  cfg.out = out;

  try {
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
