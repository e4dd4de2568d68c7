#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "idstat/classifier.hpp"
#include "idstat/language_profile.hpp"
#include "idstat/lexer.hpp"
#include "idstat/stats.hpp"

namespace idstat {

enum class ScanMode { SingleFile, SingleProject, MultiProject };

/// Per-file scan detail, kept when ScanOptions::collect_detail is set.
struct FileDetail {
  std::string path;  // relative to the project root, '/'-separated
  std::uint64_t loc = 0;
  std::map<std::string, IdentifierRecord> identifiers;

  bool operator==(const FileDetail&) const = default;
};

struct NameInfo {
  Convention convention = Convention::Unmatched;
  std::uint64_t occurrences = 0;  // project-wide

  bool operator==(const NameInfo&) const = default;
};

/// One result row of a project scan. counts.total_ids is the number of
/// distinct identifier spellings across the project; total_loc sums physical
/// lines of every scanned file.
struct ProjectReport {
  std::string project;
  std::string version;
  Language language = Language::C;
  ConventionCounts counts;
  std::uint64_t total_loc = 0;
  std::uint64_t total_files = 0;
  std::map<std::string, NameInfo> identifiers;  // populated with collect_detail
  std::vector<FileDetail> files;                // populated with collect_detail
  std::vector<std::string> warnings;
};

struct ScanOptions {
  bool collect_detail = false;
  std::function<void(const std::filesystem::path&)> on_file;  // progress callback
};

/// Recursive, depth-first, lexicographically ordered listing of the files
/// under root whose lowercase extension belongs to the profile. Symbolic
/// links are not followed; hidden directories are traversed. Unreadable
/// subdirectories are skipped with a warning; an unreadable root throws
/// std::runtime_error.
std::vector<std::filesystem::path> discover_files(const std::filesystem::path& root,
                                                  const LanguageProfile& profile,
                                                  std::vector<std::string>* warnings = nullptr);

/// Scans every matching file under root and folds the per-file identifier
/// maps into one report. Distinctness is project-wide; occurrence counts are
/// summed. Unreadable files are excluded from totals and reported as
/// warnings. A project with zero matching files yields an all-zero report.
ProjectReport scan_project(const std::filesystem::path& root, const LanguageProfile& profile,
                           std::string name, std::string version = {},
                           const ScanOptions& options = {});

/// SingleFile: one report over one file (subject to the extension filter).
/// SingleProject: one report over root. MultiProject: one report per
/// immediate subdirectory of root, in lexicographic order; files directly in
/// root are ignored.
std::vector<ProjectReport> scan_corpus(const std::filesystem::path& root,
                                       const LanguageProfile& profile, ScanMode mode,
                                       const ScanOptions& options = {},
                                       std::vector<std::string>* warnings = nullptr);

}  // namespace idstat
