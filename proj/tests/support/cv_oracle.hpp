#pragma once

// Two-pass brute-force reference for the coefficient of variation: the mean
// is computed first, then the squared deviations are accumulated explicitly.
// Shares no code with the production implementation.

#include <cmath>
#include <span>

namespace idstat::testsupport {

struct CvReference {
  double mean;
  double std_dev;
  double cv;
};

inline CvReference cv_brute_force(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double squared = 0.0;
  for (double v : values) squared += (v - mean) * (v - mean);
  const double std_dev = std::sqrt(squared / static_cast<double>(values.size()));
  return {mean, std_dev, std_dev / mean};
}

}  // namespace idstat::testsupport
