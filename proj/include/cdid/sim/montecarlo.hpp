#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cdid/config.hpp"
#include "cdid/sim/boxplot.hpp"
#include "cdid/sim/metrics.hpp"
#include "cdid/sim/scenes.hpp"

namespace cdid {

/// Pseudo-algorithm name for the unfiltered observation.
inline constexpr const char* kNoisyAlgorithm = "noisy";

struct BenchmarkPlan {
  std::vector<TestScene> scenes;
  std::vector<double> sigmas;
  std::vector<std::string> algorithms;
  std::size_t runs = 10;
  std::uint64_t seed = 0;
  FilterConfig base;
  bool include_noisy = true;
};

struct MonteCarloRow {
  std::string image;
  double sigma_phi = 0.0;
  std::string algorithm;
  std::size_t run = 0;
  MetricReport metrics;
  double wall_seconds = 0.0;
};

/// The six noise levels of the reference protocol.
const std::vector<double>& default_sigma_levels();

/// Runs every (scene, sigma, run, algorithm) cell. All algorithms of one
/// (scene, sigma, run) see the same noisy observation.
std::vector<MonteCarloRow> run_benchmark(
    const BenchmarkPlan& plan, const std::function<void(const MonteCarloRow&)>& progress = {});

/// Named metric of a report: psnr_phi, psnr_ampl, rmse_phi_abs, rmse_a,
/// snr_c, snr_phi_abs.
double metric_value(const MetricReport& r, const std::string& metric);

/// Mean over runs per (algorithm, image, sigma), in first-appearance order.
std::vector<MetricCell> mean_over_runs(const std::vector<MonteCarloRow>& rows,
                                       const std::string& metric);

}  // namespace cdid
