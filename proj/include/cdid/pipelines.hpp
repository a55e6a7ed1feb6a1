#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdid/config.hpp"
#include "cdid/field.hpp"
#include "cdid/grouping.hpp"

namespace cdid {

/// Filtered patches of one group, ready for overlap-add.
struct GroupEstimate {
  std::vector<Coord> coords;
  CTensor patches;  // [n1, n2, J]
  double weight = 0.0;
};

/// Weighted overlap-add accumulator.
class AggregationBuffers {
 public:
  AggregationBuffers(std::size_t height, std::size_t width);

  void add(const GroupEstimate& est);

  /// numerator / denominator pixel-wise. Throws std::logic_error if any pixel
  /// received no weight.
  ComplexField finalize() const;

  const ComplexField& numerator() const noexcept { return num_; }
  const RealField& denominator() const noexcept { return den_; }

 private:
  ComplexField num_;
  RealField den_;
};

enum class Execution {
  Parallel,         ///< OpenMP over reference positions, ordered merge
  SerialReference,  ///< plain loop; kept as the bitwise reference for Parallel
};

struct RunOptions {
  Execution execution = Execution::Parallel;
  /// Called once per group, in reference order, just before aggregation.
  std::function<void(const GroupEstimate&)> on_group;
};

/// Threshold used by one HT pass: either eta for the universal rule or a
/// fixed absolute value.
struct ThresholdLevel {
  double eta = 1.0;
  std::optional<double> absolute;
};

/// One group of the thresholding stage: match, transform, shrink, invert.
GroupEstimate ht_group_estimate(const ComplexField& input, Coord ref, const FilterConfig& cfg,
                                const ThresholdLevel& level);

/// One group of the Wiener stage. Matching and the HOSVD basis come from the
/// pilot; the noisy group at the same coordinates is attenuated in that basis.
GroupEstimate wiener_group_estimate(const ComplexField& noisy, const ComplexField& pilot, Coord ref,
                                    const FilterConfig& cfg);

/// Thresholding stage with eta = cfg.eta.
ComplexField cdf_ht(const ComplexField& input, const FilterConfig& cfg, const RunOptions& opts = {});
ComplexField cdf_ht(const ComplexField& input, const FilterConfig& cfg, const ThresholdLevel& level,
                    const RunOptions& opts = {});

/// Empirical Wiener stage guided by a pilot estimate of the same field.
ComplexField cdf_wiener(const ComplexField& noisy, const ComplexField& pilot,
                        const FilterConfig& cfg, const RunOptions& opts = {});

/// cdf_ht, followed by cdf_wiener when cfg.wiener is set.
ComplexField cdf_denoise(const ComplexField& input, const FilterConfig& cfg,
                         const RunOptions& opts = {});

/// Called before each pass of the iterative filter with the 1-based iteration
/// index, the pass input v^t and the delta handed to the pass.
using IterationObserver = std::function<void(std::size_t t, const ComplexField& v, double delta)>;

/// u^0 = z; v^t = u^{t-1} + alpha_{t-1} (z - u^{t-1}); u^t = HT(v^t, delta_{t-1}).
/// Passes never use the Wiener stage.
ComplexField cdf_iterative(const ComplexField& z, const FilterConfig& cfg,
                           const IterationObserver& observer = {}, const RunOptions& opts = {});

enum class StagePlan { HardThreshold, Wiener, Iterative };

struct AlgorithmSpec {
  SparsityType sparsity;
  StagePlan plan;
};

/// Names: {cd,imre,pham}-{ht,wi,it}.
AlgorithmSpec parse_algorithm(std::string_view name);
const std::vector<std::string>& algorithm_names();

/// Dispatches sparsity type and stage plan from the algorithm name; the rest
/// of cfg is used as given.
ComplexField run_named_algorithm(const ComplexField& z, std::string_view name,
                                 const FilterConfig& cfg, const RunOptions& opts = {});

/// Worker count used by Parallel execution: cfg.threads (or the OpenMP
/// default), capped by the CDID_THREADS environment variable when set.
int resolve_threads(const FilterConfig& cfg);

}  // namespace cdid
