#include "cdid/sim/boxplot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace cdid {

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BoxplotResult boxplot_deltas(const std::vector<MetricCell>& table) {
  if (table.empty()) throw std::invalid_argument("boxplot: empty table");

  using CellKey = std::pair<std::string, double>;
  std::vector<std::string> algorithms;
  std::map<CellKey, std::map<std::string, double>> cells;
  for (const auto& row : table) {
    if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) == algorithms.end()) {
      algorithms.push_back(row.algorithm);
    }
    auto& cell = cells[{row.image, row.sigma_phi}];
    if (!cell.emplace(row.algorithm, row.value).second) {
      throw std::invalid_argument("boxplot: duplicate entry for " + row.algorithm + " on " +
                                  row.image);
    }
  }
  for (const auto& [key, cell] : cells) {
    if (cell.size() != algorithms.size()) {
      throw std::invalid_argument("boxplot: missing cells for image " + key.first);
    }
  }

  BoxplotResult out;
  out.deltas.reserve(table.size());
  std::map<std::string, std::vector<double>> per_algo;
  for (const auto& row : table) {
    const auto& cell = cells.at({row.image, row.sigma_phi});
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [_, v] : cell) best = std::max(best, v);
    MetricCell d = row;
    d.value = row.value - best;
    per_algo[row.algorithm].push_back(d.value);
    out.deltas.push_back(std::move(d));
  }
  for (const auto& name : algorithms) {
    auto v = per_algo.at(name);
    std::sort(v.begin(), v.end());
    out.stats.push_back({name, v.front(), quantile_sorted(v, 0.25), quantile_sorted(v, 0.5),
                         quantile_sorted(v, 0.75), v.back(), v.size()});
  }
  return out;
}

}  // namespace cdid
