#include "idstat/classifier.hpp"

#include <string_view>

namespace idstat {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper_or_digit(char c) { return is_upper(c) || is_digit(c); }
bool is_lower_or_digit(char c) { return is_lower(c) || is_digit(c); }

// Scope qualifiers that may precede a Hungarian type prefix.
constexpr std::string_view kScopePrefixes[] = {"g_", "m_", "s_", "c_"};

// Hungarian type prefixes, longest first so that two-letter prefixes are
// preferred over their one-letter heads (lp before l, sz before s, ...).
constexpr std::string_view kTypePrefixes[] = {
    "by", "cb", "cr", "cx", "cy", "dw", "fn", "lp", "np", "sz",
    "a",  "b",  "c",  "h",  "i",  "l",  "n",  "p",  "s",  "w",
};

// ([A-Z][a-z]+)+[0-9]*  against the whole string.
bool capitalized_words_then_digits(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  std::size_t words = 0;
  while (i < n && is_upper(s[i])) {
    std::size_t tail = 0;
    ++i;
    while (i < n && is_lower(s[i])) {
      ++i;
      ++tail;
    }
    if (tail == 0) return false;  // every word needs a lowercase tail
    ++words;
  }
  if (words == 0) return false;
  while (i < n && is_digit(s[i])) ++i;
  return i == n;
}

// [A-Z][A-Z0-9]*(_[A-Z0-9]+)*, total length >= 2.
bool match_capital(std::string_view s) {
  if (s.size() < 2 || !is_upper(s[0])) return false;
  std::size_t i = 1;
  const std::size_t n = s.size();
  while (i < n && is_upper_or_digit(s[i])) ++i;
  while (i < n && s[i] == '_') {
    ++i;
    std::size_t run = 0;
    while (i < n && is_upper_or_digit(s[i])) {
      ++i;
      ++run;
    }
    if (run == 0) return false;
  }
  return i == n;
}

// (scope?)(type)([A-Z][a-z]+)+[0-9]*
bool match_hungarian(std::string_view s) {
  std::string_view rest = s;
  for (std::string_view scope : kScopePrefixes) {
    if (rest.starts_with(scope)) {
      rest.remove_prefix(scope.size());
      break;
    }
  }
  for (std::string_view type : kTypePrefixes) {
    if (rest.starts_with(type) && capitalized_words_then_digits(rest.substr(type.size())))
      return true;
  }
  return false;
}

// [a-z][a-z0-9]*(_[a-z0-9]+)+
bool match_underline(std::string_view s) {
  if (s.empty() || !is_lower(s[0])) return false;
  std::size_t i = 1;
  const std::size_t n = s.size();
  while (i < n && is_lower_or_digit(s[i])) ++i;
  std::size_t groups = 0;
  while (i < n && s[i] == '_') {
    ++i;
    std::size_t run = 0;
    while (i < n && is_lower_or_digit(s[i])) {
      ++i;
      ++run;
    }
    if (run == 0) return false;
    ++groups;
  }
  return groups >= 1 && i == n;
}

// [a-z][a-z0-9]*([A-Z][a-z0-9]*)+[0-9]*  or the single-word form [a-z]{2,}[0-9]*.
bool match_camel(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0 || !is_lower(s[0])) return false;
  std::size_t i = 1;
  while (i < n && is_lower(s[i])) ++i;
  if (i >= 2) {
    std::size_t j = i;
    while (j < n && is_digit(s[j])) ++j;
    if (j == n) return true;
  }
  while (i < n && is_lower_or_digit(s[i])) ++i;
  std::size_t humps = 0;
  while (i < n && is_upper(s[i])) {
    ++i;
    while (i < n && is_lower_or_digit(s[i])) ++i;
    ++humps;
  }
  return humps >= 1 && i == n;
}

}  // namespace

std::string_view convention_name(Convention c) {
  switch (c) {
    case Convention::Camel: return "Camel";
    case Convention::Pascal: return "Pascal";
    case Convention::Hungarian: return "Hungarian";
    case Convention::Underline: return "Underline";
    case Convention::Capital: return "Capital";
    case Convention::Unmatched: return "Unmatched";
  }
  return "?";
}

std::string_view rule_set_version() { return "1.0"; }

Convention classify(std::string_view name) {
  if (match_capital(name)) return Convention::Capital;
  if (match_hungarian(name)) return Convention::Hungarian;
  if (match_underline(name)) return Convention::Underline;
  if (capitalized_words_then_digits(name)) return Convention::Pascal;
  if (match_camel(name)) return Convention::Camel;
  return Convention::Unmatched;
}

ClassifiedNames classify_all(const std::map<std::string, IdentifierRecord>& records) {
  ClassifiedNames out;
  for (const auto& [name, record] : records)
    out.buckets[static_cast<std::size_t>(classify(name))].push_back(name);
  return out;
}

}  // namespace idstat
