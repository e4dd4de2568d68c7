#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "idstat/lexer.hpp"

namespace idstat {

/// Naming convention of an identifier. Every name maps to exactly one value;
/// Unmatched covers everything outside the five recognized conventions
/// (single letters, leading underscores, mixed separator styles, ...).
enum class Convention : std::uint8_t {
  Camel = 0,
  Pascal,
  Hungarian,
  Underline,
  Capital,
  Unmatched,
};

inline constexpr std::size_t kConventionCount = 6;
inline constexpr std::size_t kMatchedConventionCount = 5;

/// Column order used by report rows and summary tables.
inline constexpr std::array<Convention, kMatchedConventionCount> kReportOrder = {
    Convention::Pascal, Convention::Camel, Convention::Hungarian,
    Convention::Underline, Convention::Capital};

std::string_view convention_name(Convention c);

/// Revision tag of the classification rule tables, recorded in summary output.
std::string_view rule_set_version();

/// Classifies one identifier. Total and deterministic: rules are tested in
/// the fixed precedence order Capital, Hungarian, Underline, Pascal, Camel
/// and the first full match wins.
Convention classify(std::string_view name);

/// Partition of a set of identifier names by convention. Bucket vectors keep
/// the (sorted) input order.
struct ClassifiedNames {
  std::array<std::vector<std::string>, kConventionCount> buckets;

  const std::vector<std::string>& bucket(Convention c) const {
    return buckets[static_cast<std::size_t>(c)];
  }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& b : buckets) n += b.size();
    return n;
  }
};

ClassifiedNames classify_all(const std::map<std::string, IdentifierRecord>& records);

}  // namespace idstat
