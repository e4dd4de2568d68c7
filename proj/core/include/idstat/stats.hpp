#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idstat/classifier.hpp"
#include "idstat/language_profile.hpp"

namespace idstat {

struct ProjectReport;  // corpus.hpp

/// Convention tallies over the distinct identifiers of one project (or of a
/// whole language corpus). total_ids includes unmatched names.
struct ConventionCounts {
  std::uint64_t pascal = 0;
  std::uint64_t camel = 0;
  std::uint64_t hungarian = 0;
  std::uint64_t underline = 0;
  std::uint64_t capital = 0;
  std::uint64_t total_ids = 0;

  std::uint64_t matched() const { return pascal + camel + hungarian + underline + capital; }
  std::uint64_t count_for(Convention c) const;

  /// The five matched counts in report column order.
  std::array<std::uint64_t, kMatchedConventionCount> matched_counts() const {
    return {pascal, camel, hungarian, underline, capital};
  }

  bool operator==(const ConventionCounts&) const = default;
};

ConventionCounts tally(const ClassifiedNames& names);

/// Matched identifiers over all identifiers. Throws std::domain_error when
/// total_ids is zero.
double match_ratio(const ConventionCounts& counts);

/// Share of each convention in all identifiers, in report column order.
/// The five values sum to match_ratio(counts). Throws std::domain_error when
/// total_ids is zero.
std::array<double, kMatchedConventionCount> distribution(const ConventionCounts& counts);

/// Conventions sorted by count, descending. Ties keep the fixed label order
/// (Camel, Pascal, Hungarian, Underline, Capital) and are flagged: tied[i] is
/// true when entry i shares its count with a neighbouring entry.
struct PopularityOrder {
  std::array<Convention, kMatchedConventionCount> order{};
  std::array<bool, kMatchedConventionCount> tied{};

  bool operator==(const PopularityOrder&) const = default;
};

PopularityOrder popularity_order(const ConventionCounts& counts);

struct CvResult {
  double mean = 0.0;
  double std_dev = 0.0;
  double cv = 0.0;
};

/// Coefficient of variation with the population standard deviation
/// (divisor n). Throws std::invalid_argument for fewer than two values and
/// std::domain_error when the mean is not positive.
CvResult coefficient_of_variation(std::span<const double> values);

/// CV over the five convention counts [pascal, camel, hungarian, underline,
/// capital]. Throws std::domain_error when all five are zero.
CvResult project_cv(const ConventionCounts& counts);

struct ProjectCv {
  std::string project;
  CvResult cv;
};

/// Per-language aggregate of a set of project reports.
struct CorpusSummary {
  Language language = Language::C;
  ConventionCounts totals;
  double match_ratio = 0.0;
  std::array<double, kMatchedConventionCount> distribution{};
  PopularityOrder popularity;
  std::vector<ProjectCv> project_cvs;   // projects with at least one matched identifier
  std::optional<double> cv_average;     // arithmetic mean of project_cvs
};

/// Element-wise sum of counts plus derived statistics. All reports must share
/// one language and the list must be non-empty (std::invalid_argument
/// otherwise); projects without matched identifiers contribute no CV entry.
CorpusSummary aggregate_language(const std::vector<ProjectReport>& reports);

}  // namespace idstat
