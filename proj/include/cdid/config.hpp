#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cdid {

/// Group representation handed to the HOSVD.
enum class SparsityType {
  ComplexDomain,  ///< complex N1 x N2 x J tensor
  ReIm,           ///< real N1 x N2 x J x 2 tensor, slabs (Re, Im)
  AmPhase,        ///< real N1 x N2 x J x 2 tensor, slabs (|u|, arg u)
};

enum class ThresholdMode { Hard, Soft };

/// How the per-iteration delta of the iterative filter is interpreted.
enum class DeltaSemantics {
  EtaMultiplier,  ///< delta replaces eta in the universal threshold (default)
  Absolute,       ///< delta is the threshold itself
};

/// Signal used for block matching. Only Complex is implemented.
enum class MatchSignal { Complex, AmplitudePhase };

struct IterStep {
  double alpha = 1.0;
  double delta = 1.0;

  friend bool operator==(const IterStep&, const IterStep&) = default;
};

/// The three-step schedule (alpha, delta) = (1, 0.9), (0.35, 0.5), (0.25, 0.4).
std::vector<IterStep> default_iter_schedule();

struct FilterConfig {
  std::size_t n1 = 8;
  std::size_t n2 = 8;
  std::size_t step = 3;
  std::size_t search_window = 39;  // side length, odd
  std::size_t j_max = 32;
  SparsityType sparsity = SparsityType::ReIm;
  ThresholdMode threshold_mode = ThresholdMode::Hard;
  double eta = 1.0;
  bool wiener = false;
  double sigma = 0.0;
  std::vector<IterStep> iter_schedule = default_iter_schedule();
  DeltaSemantics delta_semantics = DeltaSemantics::EtaMultiplier;
  MatchSignal match_signal = MatchSignal::Complex;
  int threads = 0;  // 0: OpenMP default

  std::size_t search_radius() const noexcept { return search_window / 2; }

  /// Throws std::invalid_argument on any violated constraint.
  void validate() const;
};

std::string_view to_string(SparsityType s);
std::string_view to_string(ThresholdMode m);
std::string_view to_string(DeltaSemantics d);
SparsityType parse_sparsity(std::string_view s);
ThresholdMode parse_threshold_mode(std::string_view s);
DeltaSemantics parse_delta_semantics(std::string_view s);

void to_json(nlohmann::json& j, const FilterConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, FilterConfig& cfg);

}  // namespace cdid
