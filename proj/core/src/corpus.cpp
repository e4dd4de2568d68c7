#include "idstat/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace idstat {

namespace fs = std::filesystem;

namespace {

std::string lowercase_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

bool read_file(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return false;
  out = std::move(buf).str();
  return true;
}

// Entries of one directory sorted by filename bytes; empty on read failure,
// including failures in the middle of iteration.
bool list_directory(const fs::path& dir, std::vector<fs::directory_entry>& out) {
  std::error_code ec;
  fs::directory_iterator it(dir, fs::directory_options::none, ec);
  if (ec) return false;
  for (fs::directory_iterator end; it != end;) {
    out.push_back(*it);
    it.increment(ec);
    if (ec) {
      out.clear();
      return false;
    }
  }
  std::sort(out.begin(), out.end(), [](const fs::directory_entry& a, const fs::directory_entry& b) {
    return a.path().filename().native() < b.path().filename().native();
  });
  return true;
}

void walk(const fs::path& dir, const LanguageProfile& profile, std::vector<fs::path>& files,
          std::vector<std::string>* warnings) {
  std::vector<fs::directory_entry> entries;
  if (!list_directory(dir, entries)) {
    if (warnings) warnings->push_back("cannot read directory, skipped: " + dir.string());
    return;
  }
  for (const auto& entry : entries) {
    std::error_code ec;
    if (entry.is_symlink(ec) || ec) continue;  // symbolic links are not followed
    if (entry.is_directory(ec) && !ec) {
      walk(entry.path(), profile, files, warnings);
    } else if (entry.is_regular_file(ec) && !ec &&
               profile.matches_extension(lowercase_extension(entry.path()))) {
      files.push_back(entry.path());
    }
  }
}

// Scans a fixed file list into `report`; `base` anchors the relative paths
// recorded in the detail section.
void scan_file_list(const std::vector<fs::path>& files, const fs::path& base,
                    const LanguageProfile& profile, const ScanOptions& options,
                    ProjectReport& report) {
  std::map<std::string, std::uint64_t> occurrences;
  for (const fs::path& file : files) {
    if (options.on_file) options.on_file(file);
    const std::string rel = file.lexically_relative(base).generic_string();
    std::string text;
    if (!read_file(file, text)) {
      report.warnings.push_back("cannot read file, skipped: " + file.string());
      continue;
    }
    const std::uint64_t loc = count_lines(text);
    ExtractionResult extracted = extract_identifiers(text, profile);
    for (const std::string& warning : extracted.warnings)
      report.warnings.push_back(rel + ": " + warning);
    report.total_files += 1;
    report.total_loc += loc;
    for (const auto& [name, record] : extracted.identifiers)
      occurrences[name] += record.occurrences();
    if (options.collect_detail)
      report.files.push_back({rel, loc, std::move(extracted.identifiers)});
  }
  report.counts.total_ids = occurrences.size();
  for (const auto& [name, count] : occurrences) {
    const Convention convention = classify(name);
    switch (convention) {
      case Convention::Camel: ++report.counts.camel; break;
      case Convention::Pascal: ++report.counts.pascal; break;
      case Convention::Hungarian: ++report.counts.hungarian; break;
      case Convention::Underline: ++report.counts.underline; break;
      case Convention::Capital: ++report.counts.capital; break;
      case Convention::Unmatched: break;
    }
    if (options.collect_detail) report.identifiers.emplace(name, NameInfo{convention, count});
  }
}

void require_readable_directory(const fs::path& root) {
  std::error_code ec;
  if (!fs::exists(root, ec) || ec)
    throw std::runtime_error("input path does not exist: " + root.string());
  if (!fs::is_directory(root, ec) || ec)
    throw std::runtime_error("input path is not a directory: " + root.string());
  fs::directory_iterator probe(root, fs::directory_options::none, ec);
  if (ec) throw std::runtime_error("cannot read directory: " + root.string());
}

}  // namespace

std::vector<fs::path> discover_files(const fs::path& root, const LanguageProfile& profile,
                                     std::vector<std::string>* warnings) {
  require_readable_directory(root);
  std::vector<fs::path> files;
  walk(root, profile, files, warnings);
  return files;
}

ProjectReport scan_project(const fs::path& root, const LanguageProfile& profile, std::string name,
                           std::string version, const ScanOptions& options) {
  ProjectReport report;
  report.project = std::move(name);
  report.version = std::move(version);
  report.language = profile.language;
  const std::vector<fs::path> files = discover_files(root, profile, &report.warnings);
  scan_file_list(files, root, profile, options, report);
  return report;
}

std::vector<ProjectReport> scan_corpus(const fs::path& root, const LanguageProfile& profile,
                                       ScanMode mode, const ScanOptions& options,
                                       std::vector<std::string>* warnings) {
  switch (mode) {
    case ScanMode::SingleFile: {
      std::error_code ec;
      if (!fs::exists(root, ec) || ec)
        throw std::runtime_error("input path does not exist: " + root.string());
      if (!fs::is_regular_file(root, ec) || ec)
        throw std::runtime_error("input path is not a regular file: " + root.string());
      ProjectReport report;
      report.project = root.filename().string();
      report.language = profile.language;
      std::vector<fs::path> files;
      if (profile.matches_extension(lowercase_extension(root))) {
        files.push_back(root);
      } else {
        report.warnings.push_back("file extension not covered by the language filter: " +
                                  root.string());
      }
      scan_file_list(files, root.parent_path(), profile, options, report);
      return {std::move(report)};
    }
    case ScanMode::SingleProject:
      return {scan_project(root, profile, root.filename().string(), {}, options)};
    case ScanMode::MultiProject: {
      require_readable_directory(root);
      std::vector<fs::directory_entry> entries;
      list_directory(root, entries);
      std::vector<ProjectReport> reports;
      for (const auto& entry : entries) {
        std::error_code ec;
        if (entry.is_symlink(ec) || ec) continue;
        if (!entry.is_directory(ec) || ec) continue;
        reports.push_back(scan_project(entry.path(), profile,
                                       entry.path().filename().string(), {}, options));
      }
      if (reports.empty() && warnings)
        warnings->push_back("no project subdirectories under: " + root.string());
      return reports;
    }
  }
  throw std::invalid_argument("unknown scan mode");
}

}  // namespace idstat
