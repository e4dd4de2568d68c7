#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace idstat {

enum class Language { C, Cpp, Java };

/// Display name used in report rows: "C", "C++", "Java".
std::string_view language_name(Language lang);

/// Short identifier used for flags and data file names: "c", "cpp", "java".
std::string_view language_id(Language lang);

/// Accepts both the short id and the display name (case-insensitive).
std::optional<Language> parse_language(std::string_view text);

/// Per-language scan configuration: which file extensions are picked up,
/// which words are reserved (and therefore never identifiers), and whether
/// preprocessor directives need special handling.
struct LanguageProfile {
  Language language = Language::C;
  std::set<std::string> extensions;                 // lowercase, with leading dot
  std::set<std::string, std::less<>> keywords;
  bool has_preprocessor = false;

  bool is_keyword(std::string_view word) const { return keywords.contains(word); }
  bool matches_extension(std::string_view lowercase_ext) const {
    return extensions.contains(std::string(lowercase_ext));
  }
};

/// Built-in profile. The keyword table is compiled in from the shipped
/// core/data/keywords.<id>.txt files at build time.
const LanguageProfile& profile_for(Language lang);

/// Profile whose keyword table is read from `keyword_dir/keywords.<id>.txt`
/// (one word per line, blank lines ignored). Throws std::runtime_error when
/// the file is missing or empty.
LanguageProfile load_profile(Language lang, const std::filesystem::path& keyword_dir);

}  // namespace idstat
