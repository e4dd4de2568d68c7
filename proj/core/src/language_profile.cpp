#include "idstat/language_profile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "keyword_data.hpp"

namespace idstat {
namespace {

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// One word per line; surrounding whitespace and CR trimmed, blank lines ignored.
std::set<std::string, std::less<>> parse_keyword_list(std::string_view text) {
  std::set<std::string, std::less<>> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) words.emplace(line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return words;
}

const char* embedded_keywords(Language lang) {
  switch (lang) {
    case Language::C: return detail::kEmbeddedKeywordsC;
    case Language::Cpp: return detail::kEmbeddedKeywordsCpp;
    case Language::Java: return detail::kEmbeddedKeywordsJava;
  }
  throw std::invalid_argument("unknown language");
}

std::set<std::string> extensions_for(Language lang) {
  switch (lang) {
    case Language::C: return {".c", ".h"};
    case Language::Cpp: return {".c", ".h", ".cpp", ".hpp"};
    case Language::Java: return {".java"};
  }
  throw std::invalid_argument("unknown language");
}

LanguageProfile make_profile(Language lang, std::set<std::string, std::less<>> keywords) {
  if (keywords.empty()) throw std::runtime_error("keyword table is empty");
  LanguageProfile profile;
  profile.language = lang;
  profile.extensions = extensions_for(lang);
  profile.keywords = std::move(keywords);
  profile.has_preprocessor = lang == Language::C || lang == Language::Cpp;
  return profile;
}

}  // namespace

std::string_view language_name(Language lang) {
  switch (lang) {
    case Language::C: return "C";
    case Language::Cpp: return "C++";
    case Language::Java: return "Java";
  }
  return "?";
}

std::string_view language_id(Language lang) {
  switch (lang) {
    case Language::C: return "c";
    case Language::Cpp: return "cpp";
    case Language::Java: return "java";
  }
  return "?";
}

std::optional<Language> parse_language(std::string_view text) {
  std::string lower = to_lower(text);
  if (lower == "c") return Language::C;
  if (lower == "cpp" || lower == "c++") return Language::Cpp;
  if (lower == "java") return Language::Java;
  return std::nullopt;
}

const LanguageProfile& profile_for(Language lang) {
  static const LanguageProfile c =
      make_profile(Language::C, parse_keyword_list(embedded_keywords(Language::C)));
  static const LanguageProfile cpp =
      make_profile(Language::Cpp, parse_keyword_list(embedded_keywords(Language::Cpp)));
  static const LanguageProfile java =
      make_profile(Language::Java, parse_keyword_list(embedded_keywords(Language::Java)));
  switch (lang) {
    case Language::C: return c;
    case Language::Cpp: return cpp;
    case Language::Java: return java;
  }
  throw std::invalid_argument("unknown language");
}

LanguageProfile load_profile(Language lang, const std::filesystem::path& keyword_dir) {
  std::filesystem::path file =
      keyword_dir / ("keywords." + std::string(language_id(lang)) + ".txt");
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open keyword table: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  auto keywords = parse_keyword_list(buf.str());
  if (keywords.empty()) throw std::runtime_error("keyword table is empty: " + file.string());
  return make_profile(lang, std::move(keywords));
}

}  // namespace idstat
