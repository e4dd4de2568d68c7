#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "idstat/language_profile.hpp"

namespace idstat {

/// One identifier occurrence in cleaned source text.
struct Token {
  std::string text;
  std::uint32_t line = 0;  // 1-based

  bool operator==(const Token&) const = default;
};

/// All occurrences of one distinct identifier spelling within a single file.
/// One line entry per occurrence, in scan order (non-decreasing).
struct IdentifierRecord {
  std::vector<std::uint32_t> lines;

  std::uint64_t occurrences() const { return lines.size(); }
  bool operator==(const IdentifierRecord&) const = default;
};

struct StripResult {
  std::string text;                   // same byte length and line structure as the input
  std::vector<std::string> warnings;  // unterminated comment / literal diagnostics
};

/// Blanks comments, string/character literal contents, and #include target
/// paths while preserving the line structure of the input byte-for-byte.
/// Unterminated regions are blanked to end of file and reported as warnings;
/// the function never fails. Processing is byte-oriented: non-ASCII bytes are
/// left for the tokenizer to treat as separators.
StripResult strip_noise(std::string_view source, const LanguageProfile& profile);

/// Emits maximal [A-Za-z_][A-Za-z0-9_]* runs in document order, excluding
/// keywords and runs that begin inside a numeric lexeme (0xFF, 1e5f, ...).
/// Expects text already processed by strip_noise.
std::vector<Token> tokenize(std::string_view clean_text, const LanguageProfile& profile);

struct ExtractionResult {
  std::map<std::string, IdentifierRecord> identifiers;
  std::vector<std::string> warnings;
};

/// strip_noise + tokenize, folded into per-name records.
ExtractionResult extract_identifiers(std::string_view source, const LanguageProfile& profile);

/// Physical line count: number of newline-delimited lines, counting a final
/// unterminated line. Empty input has zero lines.
std::uint64_t count_lines(std::string_view text);

}  // namespace idstat
