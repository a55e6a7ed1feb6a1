#pragma once

#include <string>
#include <vector>

namespace cdid {

/// One metric value for (algorithm k, noise level l, image m).
struct MetricCell {
  std::string algorithm;
  std::string image;
  double sigma_phi = 0.0;
  double value = 0.0;
};

struct BoxStats {
  std::string algorithm;
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

struct BoxplotResult {
  std::vector<MetricCell> deltas;  // value - best value of the same (image, sigma) cell
  std::vector<BoxStats> stats;     // one entry per algorithm, first-appearance order
};

/// Differences to the per-cell best algorithm and their five-number summary.
/// Every algorithm must appear exactly once in every (image, sigma) cell;
/// throws std::invalid_argument otherwise.
BoxplotResult boxplot_deltas(const std::vector<MetricCell>& table);

/// Linear-interpolation quantile (numpy's default) of an ascending sample.
double quantile_sorted(const std::vector<double>& sorted, double p);

}  // namespace cdid
