#pragma once

#include <vector>

#include "cdid/tensor.hpp"

namespace cdid {

/// Core tensor plus one square unitary (orthogonal for real data) factor per
/// mode, so that t = core x_0 T_0 x_1 T_1 ... (all modes).
template <typename T>
struct HosvdFactors {
  Tensor<T> core;
  std::vector<Matrix<T>> factors;
};

/// Full (untruncated) HOSVD of an order-3 or order-4 tensor. factors[k] holds
/// the left singular vectors of unfold(t, k); core = t x_k factors[k]^H.
template <typename T>
HosvdFactors<T> hosvd(const Tensor<T>& t);

/// Spectrum of t in a given basis: t x_k factors[k]^H for every mode.
template <typename T>
Tensor<T> hosvd_analysis(const Tensor<T>& t, const std::vector<Matrix<T>>& factors);

/// core x_k factors[k] for every mode.
template <typename T>
Tensor<T> hosvd_synthesis(const HosvdFactors<T>& f);

template <typename T>
Tensor<T> hosvd_synthesis(const Tensor<T>& core, const std::vector<Matrix<T>>& factors);

}  // namespace cdid
