#include "cdid/shrinkage.hpp"

#include <cmath>
#include <stdexcept>

namespace cdid {

double universal_threshold(const ThresholdSpec& spec) {
  if (!(spec.eta > 0.0)) throw std::invalid_argument("threshold: eta must be positive");
  if (!(spec.sigma >= 0.0)) throw std::invalid_argument("threshold: sigma must be >= 0");
  if (spec.group_card < 1) throw std::invalid_argument("threshold: group cardinality must be >= 1");
  return spec.eta * spec.sigma * std::sqrt(2.0 * std::log(static_cast<double>(spec.group_card)));
}

template <typename T>
std::size_t threshold_in_place(std::span<T> values, double delta, ThresholdMode mode) {
  std::size_t kept = 0;
  if (mode == ThresholdMode::Hard) {
    for (auto& v : values) {
      if (std::abs(v) < delta) v = T{};
      if (v != T{}) ++kept;
    }
  } else {
    for (auto& v : values) {
      const double mag = std::abs(v);
      if (mag <= delta) {
        v = T{};
      } else {
        v *= (mag - delta) / mag;
        ++kept;
      }
    }
  }
  return kept;
}

namespace {

template <typename T>
Thresholded<T> threshold_copy(const Tensor<T>& core, double delta, ThresholdMode mode) {
  if (!(delta >= 0.0)) throw std::invalid_argument("threshold: delta must be >= 0");
  Thresholded<T> out{core, 0};
  out.retained = threshold_in_place<T>(out.core.data(), delta, mode);
  return out;
}

inline double energy(double v) { return v * v; }
inline double energy(const cplx& v) { return std::norm(v); }

}  // namespace

Thresholded<cplx> hard_threshold_complex(const CTensor& core, double delta) {
  return threshold_copy(core, delta, ThresholdMode::Hard);
}
Thresholded<cplx> soft_threshold_complex(const CTensor& core, double delta) {
  return threshold_copy(core, delta, ThresholdMode::Soft);
}
Thresholded<double> hard_threshold_real(const RTensor& core, double delta) {
  return threshold_copy(core, delta, ThresholdMode::Hard);
}
Thresholded<double> soft_threshold_real(const RTensor& core, double delta) {
  return threshold_copy(core, delta, ThresholdMode::Soft);
}

template <typename T>
double wiener_in_place(std::span<T> noisy, std::span<const T> pilot, double sigma) {
  if (noisy.size() != pilot.size()) throw std::invalid_argument("wiener: spectra differ in size");
  const double s2 = sigma * sigma;
  double weight_energy = 0.0;
  for (std::size_t i = 0; i < noisy.size(); ++i) {
    const double p2 = energy(pilot[i]);
    const double w = p2 > 0.0 ? p2 / (p2 + s2) : 0.0;
    noisy[i] *= w;
    weight_energy += w * w;
  }
  return weight_energy;
}

template <typename T>
WienerAttenuated<T> wiener_attenuate(const Tensor<T>& noisy_core, const Tensor<T>& pilot_core,
                                     double sigma) {
  if (noisy_core.dims() != pilot_core.dims()) {
    throw std::invalid_argument("wiener_attenuate: core dims differ");
  }
  if (!(sigma >= 0.0)) throw std::invalid_argument("wiener_attenuate: sigma must be >= 0");
  WienerAttenuated<T> out{noisy_core, 0.0};
  out.weight_energy = wiener_in_place<T>(out.core.data(), pilot_core.data(), sigma);
  return out;
}

template std::size_t threshold_in_place(std::span<double>, double, ThresholdMode);
template std::size_t threshold_in_place(std::span<cplx>, double, ThresholdMode);
template double wiener_in_place(std::span<double>, std::span<const double>, double);
template double wiener_in_place(std::span<cplx>, std::span<const cplx>, double);
template WienerAttenuated<double> wiener_attenuate(const RTensor&, const RTensor&, double);
template WienerAttenuated<cplx> wiener_attenuate(const CTensor&, const CTensor&, double);

}  // namespace cdid
