#pragma once

#include <cstdint>
#include <vector>

#include "cdid/field.hpp"
#include "cdid/sim/rng.hpp"
#include "cdid/tensor.hpp"

namespace testutil {

inline cdid::cplx random_cplx(cdid::Rng& rng) { return {rng.normal(), rng.normal()}; }

template <typename T>
T random_value(cdid::Rng& rng) {
  if constexpr (std::is_same_v<T, double>) {
    return rng.normal();
  } else {
    return random_cplx(rng);
  }
}

template <typename T>
cdid::Tensor<T> random_tensor(const std::vector<std::size_t>& dims, cdid::Rng& rng) {
  cdid::Tensor<T> t(dims);
  for (auto& v : t.data()) v = random_value<T>(rng);
  return t;
}

inline cdid::CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, cdid::Rng& rng) {
  cdid::CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = random_cplx(rng);
  return m;
}

inline cdid::ComplexField random_field(std::size_t h, std::size_t w, cdid::Rng& rng) {
  cdid::ComplexField f(h, w);
  for (auto& v : f.data()) v = random_cplx(rng);
  return f;
}

template <typename T>
double max_abs_diff(const cdid::Tensor<T>& a, const cdid::Tensor<T>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testutil
