#include "cdid/sim/montecarlo.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "cdid/pipelines.hpp"
#include "cdid/sim/noise.hpp"

namespace cdid {

const std::vector<double>& default_sigma_levels() {
  static const std::vector<double> levels = {0.05, 0.1, 0.2, 0.3, 0.5, 0.9};
  return levels;
}

std::vector<MonteCarloRow> run_benchmark(const BenchmarkPlan& plan,
                                         const std::function<void(const MonteCarloRow&)>& progress) {
  if (plan.runs < 1) throw std::invalid_argument("benchmark: runs must be >= 1");
  for (const auto& a : plan.algorithms) parse_algorithm(a);

  std::vector<MonteCarloRow> rows;
  auto emit = [&](MonteCarloRow row) {
    if (progress) progress(row);
    rows.push_back(std::move(row));
  };
  for (const auto& scene : plan.scenes) {
    for (double sigma_phi : plan.sigmas) {
      for (std::size_t run = 0; run < plan.runs; ++run) {
        const NoisyObservation obs = make_noisy(scene, {sigma_phi, plan.seed, plan.runs}, run);
        if (plan.include_noisy) {
          emit({scene.name, sigma_phi, kNoisyAlgorithm, run, evaluate_estimate(obs.z, scene), 0.0});
        }
        FilterConfig cfg = plan.base;
        cfg.sigma = obs.sigma;
        for (const auto& algo : plan.algorithms) {
          const auto t0 = std::chrono::steady_clock::now();
          const ComplexField est = run_named_algorithm(obs.z, algo, cfg);
          const double secs =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          emit({scene.name, sigma_phi, algo, run, evaluate_estimate(est, scene), secs});
        }
      }
    }
  }
  return rows;
}

double metric_value(const MetricReport& r, const std::string& metric) {
  if (metric == "psnr_phi") return r.psnr_phi;
  if (metric == "psnr_ampl") return r.psnr_ampl;
  if (metric == "rmse_phi_abs") return r.rmse_phi_abs;
  if (metric == "rmse_a") return r.rmse_a;
  if (metric == "snr_c") return r.snr_c;
  if (metric == "snr_phi_abs") return r.snr_phi_abs;
  throw std::invalid_argument("unknown metric '" + metric + "'");
}

std::vector<MetricCell> mean_over_runs(const std::vector<MonteCarloRow>& rows,
                                       const std::string& metric) {
  struct Acc {
    MetricCell cell;
    double sum = 0.0;
    std::size_t n = 0;
  };
  std::vector<Acc> accs;
  std::map<std::tuple<std::string, std::string, double>, std::size_t> index;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.algorithm, r.image, r.sigma_phi);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, accs.size()).first;
      accs.push_back({{r.algorithm, r.image, r.sigma_phi, 0.0}, 0.0, 0});
    }
    accs[it->second].sum += metric_value(r.metrics, metric);
    accs[it->second].n += 1;
  }
  std::vector<MetricCell> out;
  out.reserve(accs.size());
  for (auto& a : accs) {
    a.cell.value = a.sum / static_cast<double>(a.n);
    out.push_back(a.cell);
  }
  return out;
}

}  // namespace cdid
