#include "idstat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "idstat/corpus.hpp"

namespace idstat {

std::uint64_t ConventionCounts::count_for(Convention c) const {
  switch (c) {
    case Convention::Camel: return camel;
    case Convention::Pascal: return pascal;
    case Convention::Hungarian: return hungarian;
    case Convention::Underline: return underline;
    case Convention::Capital: return capital;
    case Convention::Unmatched: return total_ids - matched();
  }
  throw std::invalid_argument("unknown convention");
}

ConventionCounts tally(const ClassifiedNames& names) {
  ConventionCounts counts;
  counts.camel = names.bucket(Convention::Camel).size();
  counts.pascal = names.bucket(Convention::Pascal).size();
  counts.hungarian = names.bucket(Convention::Hungarian).size();
  counts.underline = names.bucket(Convention::Underline).size();
  counts.capital = names.bucket(Convention::Capital).size();
  counts.total_ids = counts.matched() + names.bucket(Convention::Unmatched).size();
  return counts;
}

double match_ratio(const ConventionCounts& counts) {
  if (counts.total_ids == 0)
    throw std::domain_error("match ratio undefined: total identifier count is zero");
  return static_cast<double>(counts.matched()) / static_cast<double>(counts.total_ids);
}

std::array<double, kMatchedConventionCount> distribution(const ConventionCounts& counts) {
  if (counts.total_ids == 0)
    throw std::domain_error("distribution undefined: total identifier count is zero");
  std::array<double, kMatchedConventionCount> shares{};
  const auto matched = counts.matched_counts();
  for (std::size_t i = 0; i < matched.size(); ++i)
    shares[i] = static_cast<double>(matched[i]) / static_cast<double>(counts.total_ids);
  return shares;
}

PopularityOrder popularity_order(const ConventionCounts& counts) {
  PopularityOrder result;
  // Start from the fixed label order; stable sort keeps it for equal counts.
  result.order = {Convention::Camel, Convention::Pascal, Convention::Hungarian,
                  Convention::Underline, Convention::Capital};
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&counts](Convention a, Convention b) {
                     return counts.count_for(a) > counts.count_for(b);
                   });
  for (std::size_t i = 0; i < result.order.size(); ++i) {
    const std::uint64_t count = counts.count_for(result.order[i]);
    const bool ties_prev = i > 0 && counts.count_for(result.order[i - 1]) == count;
    const bool ties_next =
        i + 1 < result.order.size() && counts.count_for(result.order[i + 1]) == count;
    result.tied[i] = ties_prev || ties_next;
  }
  return result;
}

CvResult coefficient_of_variation(std::span<const double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("coefficient of variation needs at least two values");
  // Welford's update; M2 accumulates the sum of squared deviations.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t count = 0;
  for (double v : values) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }
  if (!(mean > 0.0)) throw std::domain_error("coefficient of variation undefined: mean is zero");
  const double std_dev = std::sqrt(m2 / static_cast<double>(values.size()));
  return {mean, std_dev, std_dev / mean};
}

CvResult project_cv(const ConventionCounts& counts) {
  if (counts.matched() == 0)
    throw std::domain_error("project CV undefined: no matched identifiers");
  const auto matched = counts.matched_counts();
  std::array<double, kMatchedConventionCount> values{};
  for (std::size_t i = 0; i < matched.size(); ++i) values[i] = static_cast<double>(matched[i]);
  return coefficient_of_variation(values);
}

CorpusSummary aggregate_language(const std::vector<ProjectReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("aggregate_language: empty report list");
  const Language language = reports.front().language;
  CorpusSummary summary;
  summary.language = language;
  for (const ProjectReport& report : reports) {
    if (report.language != language)
      throw std::invalid_argument("aggregate_language: reports mix languages");
    summary.totals.pascal += report.counts.pascal;
    summary.totals.camel += report.counts.camel;
    summary.totals.hungarian += report.counts.hungarian;
    summary.totals.underline += report.counts.underline;
    summary.totals.capital += report.counts.capital;
    summary.totals.total_ids += report.counts.total_ids;
  }
  summary.match_ratio = match_ratio(summary.totals);
  summary.distribution = distribution(summary.totals);
  summary.popularity = popularity_order(summary.totals);
  for (const ProjectReport& report : reports) {
    if (report.counts.matched() == 0) continue;  // CV undefined for this project
    summary.project_cvs.push_back({report.project, project_cv(report.counts)});
  }
  if (!summary.project_cvs.empty()) {
    double sum = 0.0;
    for (const ProjectCv& entry : summary.project_cvs) sum += entry.cv.cv;
    summary.cv_average = sum / static_cast<double>(summary.project_cvs.size());
  }
  return summary;
}

}  // namespace idstat
