#include "cdid/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "cdid/hosvd.hpp"
#include "cdid/shrinkage.hpp"
#include "cdid/sparsity.hpp"

namespace cdid {

// ---------------------------------------------------------------------------
// Aggregation

AggregationBuffers::AggregationBuffers(std::size_t height, std::size_t width)
    : num_(height, width), den_(height, width) {}

void AggregationBuffers::add(const GroupEstimate& est) {
  const std::size_t n1 = est.patches.dim(0);
  const std::size_t n2 = est.patches.dim(1);
  const auto src = est.patches.data();
  for (std::size_t k = 0; k < est.coords.size(); ++k) {
    const Coord c = est.coords[k];
    for (std::size_t i = 0; i < n1; ++i) {
      cplx* num = &num_(c.row + i, c.col);
      double* den = &den_(c.row + i, c.col);
      for (std::size_t j = 0; j < n2; ++j) {
        num[j] += est.weight * src[i + n1 * (j + n2 * k)];
        den[j] += est.weight;
      }
    }
  }
}

ComplexField AggregationBuffers::finalize() const {
  ComplexField out(num_.height(), num_.width());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(den_[i] > 0.0)) {
      throw std::logic_error("aggregation left pixel " + std::to_string(i) + " uncovered");
    }
    out[i] = num_[i] / den_[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group kernels

namespace {

double slab_sigma(const FilterConfig& cfg) {
  // Each real component carries half of the complex noise variance.
  return cfg.sparsity == SparsityType::ComplexDomain ? cfg.sigma : cfg.sigma / std::sqrt(2.0);
}

template <typename F>
auto with_core(GroupSpectrum& spec, F&& fn) {
  return std::visit([&](auto& factors) { return fn(factors.core.data()); }, spec.factors);
}

}  // namespace

GroupEstimate ht_group_estimate(const ComplexField& input, Coord ref, const FilterConfig& cfg,
                                const ThresholdLevel& level) {
  const PatchGroup g = match_group(input, ref.row, ref.col, cfg);
  GroupSpectrum spec = analyze_group(g, cfg.sparsity);

  const double delta =
      level.absolute ? *level.absolute
                     : universal_threshold({level.eta, cfg.sigma, cfg.threshold_mode,
                                            cfg.n1 * cfg.n2 * g.size()});
  const std::size_t retained = with_core(
      spec, [&](auto core) { return threshold_in_place(core, delta, cfg.threshold_mode); });

  PatchGroup filtered = synthesize_group(spec, cfg.n1, cfg.n2);
  return {std::move(filtered.coords), std::move(filtered.patches),
          1.0 / (1.0 + static_cast<double>(retained))};
}

GroupEstimate wiener_group_estimate(const ComplexField& noisy, const ComplexField& pilot, Coord ref,
                                    const FilterConfig& cfg) {
  const PatchGroup pg = match_group(pilot, ref.row, ref.col, cfg);
  PatchGroup ng;
  ng.coords = pg.coords;
  ng.patches = gather_patches(noisy, pg.coords, cfg.n1, cfg.n2);

  GroupSpectrum spec = analyze_group(pg, cfg.sparsity);
  const DomainTensor noisy_dom = to_domain(ng, cfg.sparsity);
  const double sigma = slab_sigma(cfg);

  double energy = 0.0;
  std::visit(
      [&](auto& factors) {
        using TensorT = std::decay_t<decltype(factors.core)>;
        TensorT noisy_core = hosvd_analysis(std::get<TensorT>(noisy_dom), factors.factors);
        energy = wiener_in_place(noisy_core.data(),
                                 std::span<const typename TensorT::value_type>(factors.core.data()),
                                 sigma);
        factors.core = std::move(noisy_core);
      },
      spec.factors);

  PatchGroup filtered = synthesize_group(spec, cfg.n1, cfg.n2);
  return {std::move(filtered.coords), std::move(filtered.patches), 1.0 / std::max(energy, 1e-12)};
}

// ---------------------------------------------------------------------------
// Drivers

int resolve_threads(const FilterConfig& cfg) {
  int n = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  if (const char* env = std::getenv("CDID_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(n, 1);
}

namespace {

template <typename Kernel>
ComplexField run_groups(std::size_t height, std::size_t width, const FilterConfig& cfg,
                        const RunOptions& opts, Kernel&& kernel) {
  const auto refs = reference_positions(height, width, cfg);
  AggregationBuffers agg(height, width);
  auto merge = [&](const GroupEstimate& est) {
    if (opts.on_group) opts.on_group(est);
    agg.add(est);
  };

  if (opts.execution == Execution::SerialReference) {
    for (const auto& r : refs) merge(kernel(r));
    return agg.finalize();
  }

  // Estimates of a chunk are computed concurrently, then merged in reference
  // order, so the floating-point accumulation order matches the serial path.
  const int threads = resolve_threads(cfg);
  const std::size_t chunk = std::max<std::size_t>(64, static_cast<std::size_t>(threads) * 16);
  std::vector<GroupEstimate> buffer(chunk);
  for (std::size_t start = 0; start < refs.size(); start += chunk) {
    const auto count = static_cast<std::ptrdiff_t>(std::min(chunk, refs.size() - start));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        buffer[static_cast<std::size_t>(i)] = kernel(refs[start + static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical(cdid_group_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::ptrdiff_t i = 0; i < count; ++i) merge(buffer[static_cast<std::size_t>(i)]);
  }
  return agg.finalize();
}

}  // namespace

ComplexField cdf_ht(const ComplexField& input, const FilterConfig& cfg, const ThresholdLevel& level,
                    const RunOptions& opts) {
  cfg.validate();
  if (level.absolute && !(*level.absolute >= 0.0)) {
    throw std::invalid_argument("absolute threshold must be >= 0");
  }
  return run_groups(input.height(), input.width(), cfg, opts,
                    [&](Coord r) { return ht_group_estimate(input, r, cfg, level); });
}

ComplexField cdf_ht(const ComplexField& input, const FilterConfig& cfg, const RunOptions& opts) {
  return cdf_ht(input, cfg, ThresholdLevel{cfg.eta, std::nullopt}, opts);
}

ComplexField cdf_wiener(const ComplexField& noisy, const ComplexField& pilot,
                        const FilterConfig& cfg, const RunOptions& opts) {
  cfg.validate();
  if (!noisy.same_shape(pilot)) throw std::invalid_argument("cdf_wiener: noisy/pilot shape mismatch");
  return run_groups(noisy.height(), noisy.width(), cfg, opts,
                    [&](Coord r) { return wiener_group_estimate(noisy, pilot, r, cfg); });
}

ComplexField cdf_denoise(const ComplexField& input, const FilterConfig& cfg,
                         const RunOptions& opts) {
  ComplexField pilot = cdf_ht(input, cfg, opts);
  if (!cfg.wiener) return pilot;
  return cdf_wiener(input, pilot, cfg, opts);
}

ComplexField cdf_iterative(const ComplexField& z, const FilterConfig& cfg,
                           const IterationObserver& observer, const RunOptions& opts) {
  cfg.validate();
  if (cfg.iter_schedule.empty()) throw std::invalid_argument("iterative filter: empty schedule");

  FilterConfig pass_cfg = cfg;
  pass_cfg.wiener = false;
  ComplexField u = z;
  ComplexField v(z.height(), z.width());
  for (std::size_t t = 1; t <= cfg.iter_schedule.size(); ++t) {
    const IterStep step = cfg.iter_schedule[t - 1];
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = u[i] + step.alpha * (z[i] - u[i]);
    if (observer) observer(t, v, step.delta);
    const ThresholdLevel level = cfg.delta_semantics == DeltaSemantics::EtaMultiplier
                                     ? ThresholdLevel{step.delta, std::nullopt}
                                     : ThresholdLevel{cfg.eta, step.delta};
    u = cdf_ht(v, pass_cfg, level, opts);
  }
  return u;
}

// ---------------------------------------------------------------------------
// Named algorithms

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"cd-ht",   "cd-wi",   "cd-it",
                                                 "imre-ht", "imre-wi", "imre-it",
                                                 "pham-ht", "pham-wi", "pham-it"};
  return names;
}

AlgorithmSpec parse_algorithm(std::string_view name) {
  const auto dash = name.find('-');
  if (dash != std::string_view::npos) {
    const auto family = name.substr(0, dash);
    const auto stage = name.substr(dash + 1);
    std::optional<SparsityType> s;
    if (family == "cd") s = SparsityType::ComplexDomain;
    if (family == "imre") s = SparsityType::ReIm;
    if (family == "pham") s = SparsityType::AmPhase;
    std::optional<StagePlan> p;
    if (stage == "ht") p = StagePlan::HardThreshold;
    if (stage == "wi") p = StagePlan::Wiener;
    if (stage == "it") p = StagePlan::Iterative;
    if (s && p) return {*s, *p};
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

ComplexField run_named_algorithm(const ComplexField& z, std::string_view name,
                                 const FilterConfig& cfg, const RunOptions& opts) {
  const AlgorithmSpec algo = parse_algorithm(name);
  FilterConfig c = cfg;
  c.sparsity = algo.sparsity;
  switch (algo.plan) {
    case StagePlan::HardThreshold:
      c.wiener = false;
      return cdf_ht(z, c, opts);
    case StagePlan::Wiener:
      c.wiener = true;
      return cdf_denoise(z, c, opts);
    case StagePlan::Iterative:
      return cdf_iterative(z, c, {}, opts);
  }
  throw std::logic_error("unreachable stage plan");
}

}  // namespace cdid
