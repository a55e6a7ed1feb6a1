#pragma once

#include <cstddef>
#include <span>

#include "cdid/config.hpp"
#include "cdid/tensor.hpp"

namespace cdid {

struct ThresholdSpec {
  double eta = 1.0;
  double sigma = 0.0;  // complex-field noise std
  ThresholdMode mode = ThresholdMode::Hard;
  std::size_t group_card = 1;  // n1 * n2 * J
};

/// eta * sigma * sqrt(2 ln(group_card)).
double universal_threshold(const ThresholdSpec& spec);

template <typename T>
struct Thresholded {
  Tensor<T> core;
  std::size_t retained = 0;  // nonzero outputs
};

Thresholded<cplx> hard_threshold_complex(const CTensor& core, double delta);
Thresholded<cplx> soft_threshold_complex(const CTensor& core, double delta);
Thresholded<double> hard_threshold_real(const RTensor& core, double delta);
Thresholded<double> soft_threshold_real(const RTensor& core, double delta);

/// In-place element-wise shrinkage used by the pipelines. Works on the
/// modulus, so the complex forms keep the phase of every survivor and the
/// real forms reduce to the usual sign-preserving rules.
template <typename T>
std::size_t threshold_in_place(std::span<T> values, double delta, ThresholdMode mode);

template <typename T>
struct WienerAttenuated {
  Tensor<T> core;
  double weight_energy = 0.0;  // sum of squared attenuation factors
};

/// s * |p|^2 / (|p|^2 + sigma^2) element-wise; entries with |p| = 0 map to 0.
template <typename T>
WienerAttenuated<T> wiener_attenuate(const Tensor<T>& noisy_core, const Tensor<T>& pilot_core,
                                     double sigma);

/// In-place variant; returns the weight energy.
template <typename T>
double wiener_in_place(std::span<T> noisy, std::span<const T> pilot, double sigma);

}  // namespace cdid
