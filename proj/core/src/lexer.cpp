#include "idstat/lexer.hpp"

#include <string>

namespace idstat {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || is_digit(c);
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Single pass over the source bytes. Every byte inside a comment, a literal
// body, or an #include path is overwritten with a space; newlines are always
// kept, so the output has the input's exact length and line structure.
class Stripper {
 public:
  Stripper(std::string_view src, const LanguageProfile& profile)
      : src_(src), profile_(profile), out_(src) {}

  StripResult run() {
    bool line_has_code = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
        line_has_code = false;
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        blank_line_comment();
        continue;
      }
      if (c == '/' && peek(1) == '*') {
        blank_block_comment();
        continue;
      }
      if (c == '"' || c == '\'') {
        blank_literal(c);
        line_has_code = true;
        continue;
      }
      if (profile_.has_preprocessor && c == '#' && !line_has_code) {
        blank_directive_name();
        line_has_code = true;
        continue;
      }
      if (!is_blank(c)) line_has_code = true;
      ++pos_;
    }
    return {std::move(out_), std::move(warnings_)};
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void blank(std::size_t i) {
    if (src_[i] != '\n') out_[i] = ' ';
  }

  void blank_line_comment() {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      out_[pos_] = ' ';
      ++pos_;
    }
  }

  void blank_block_comment() {
    std::uint32_t start_line = line_;
    out_[pos_] = out_[pos_ + 1] = ' ';
    pos_ += 2;
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*' && peek(1) == '/') {
        out_[pos_] = out_[pos_ + 1] = ' ';
        pos_ += 2;
        return;
      }
      if (src_[pos_] == '\n') ++line_;
      blank(pos_);
      ++pos_;
    }
    warnings_.push_back("unterminated block comment starting at line " +
                        std::to_string(start_line) + "; blanked to end of file");
  }

  // Keeps both quote delimiters, blanks the body. Handles \", \\, \' and
  // backslash-newline continuations; an unescaped newline does not end the
  // literal, only the closing quote or end of file does.
  void blank_literal(char quote) {
    std::uint32_t start_line = line_;
    ++pos_;  // opening quote stays
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\') {
        out_[pos_] = ' ';
        ++pos_;
        if (pos_ < src_.size()) {
          if (src_[pos_] == '\n') ++line_;
          blank(pos_);
          ++pos_;
        }
        continue;
      }
      if (c == quote) {
        ++pos_;  // closing quote stays
        return;
      }
      if (c == '\n') ++line_;
      blank(pos_);
      ++pos_;
    }
    warnings_.push_back(std::string("unterminated ") +
                        (quote == '"' ? "string literal" : "character literal") +
                        " starting at line " + std::to_string(start_line) +
                        "; blanked to end of file");
  }

  // Blanks the directive marker and name so `include`, `define`, ... never
  // surface as identifiers; macro names and bodies stay. For #include the
  // <...> target path is blanked as well ("..." paths fall out of the normal
  // string handling).
  void blank_directive_name() {
    out_[pos_] = ' ';
    ++pos_;
    while (pos_ < src_.size() && is_blank(src_[pos_])) ++pos_;
    std::size_t name_start = pos_;
    while (pos_ < src_.size() && is_word_char(src_[pos_])) {
      out_[pos_] = ' ';
      ++pos_;
    }
    std::string_view name = src_.substr(name_start, pos_ - name_start);
    if (name != "include" && name != "include_next" && name != "import") return;
    while (pos_ < src_.size() && is_blank(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '<') {
      ++pos_;  // '<' stays
      while (pos_ < src_.size() && src_[pos_] != '>' && src_[pos_] != '\n') {
        out_[pos_] = ' ';
        ++pos_;
      }
    }
  }

  std::string_view src_;
  const LanguageProfile& profile_;
  std::string out_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::vector<std::string> warnings_;
};

}  // namespace

StripResult strip_noise(std::string_view source, const LanguageProfile& profile) {
  return Stripper(source, profile).run();
}

std::vector<Token> tokenize(std::string_view clean_text, const LanguageProfile& profile) {
  std::vector<Token> out;
  std::uint32_t line = 1;
  std::size_t i = 0;
  const std::size_t n = clean_text.size();
  while (i < n) {
    char c = clean_text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t start = i;
      while (i < n && is_word_char(clean_text[i])) ++i;
      // A run starting with a digit is a numeric lexeme; its letter tail
      // (0xFF, 1e5f) is a suffix, not an identifier.
      if (!is_digit(c)) {
        std::string_view word = clean_text.substr(start, i - start);
        if (!profile.is_keyword(word)) out.push_back({std::string(word), line});
      }
      continue;
    }
    ++i;
  }
  return out;
}

ExtractionResult extract_identifiers(std::string_view source, const LanguageProfile& profile) {
  StripResult stripped = strip_noise(source, profile);
  ExtractionResult result;
  result.warnings = std::move(stripped.warnings);
  for (Token& token : tokenize(stripped.text, profile))
    result.identifiers[std::move(token.text)].lines.push_back(token.line);
  return result;
}

std::uint64_t count_lines(std::string_view text) {
  if (text.empty()) return 0;
  std::uint64_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  if (text.back() != '\n') ++lines;
  return lines;
}

}  // namespace idstat
