#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cdid/types.hpp"

namespace cdid {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using CMatrix = Matrix<cplx>;
using RMatrix = Matrix<double>;

/// Dense tensor of order 2, 3 or 4.
///
/// Storage is column-major in the tensor sense: index 0 varies fastest, so
/// element (i0, i1, i2, i3) lives at i0 + d0*(i1 + d1*(i2 + d2*i3)). With this
/// layout the mode-0 unfolding is the raw buffer viewed as a d0 x rest matrix.
///
/// A default-constructed tensor is empty (order 0) and only serves as a
/// placeholder to be assigned to.
template <typename T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;

  /// Zero-filled tensor.
  explicit Tensor(std::vector<std::size_t> dims);

  /// Takes ownership of `data`; throws if the sizes disagree or a value is not finite.
  Tensor(std::vector<std::size_t> dims, std::vector<T> data);

  std::size_t order() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t k) const { return dims_.at(k); }
  std::size_t size() const noexcept { return data_.size(); }

  /// Product of the extents below mode k.
  std::size_t stride(std::size_t k) const;

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  T& operator[](std::size_t i) noexcept { return data_[i]; }
  const T& operator[](std::size_t i) const noexcept { return data_[i]; }

  T& operator()(std::size_t i0, std::size_t i1, std::size_t i2 = 0, std::size_t i3 = 0) noexcept {
    return data_[offset(i0, i1, i2, i3)];
  }
  const T& operator()(std::size_t i0, std::size_t i1, std::size_t i2 = 0,
                      std::size_t i3 = 0) const noexcept {
    return data_[offset(i0, i1, i2, i3)];
  }

  double norm() const noexcept;

 private:
  std::size_t offset(std::size_t i0, std::size_t i1, std::size_t i2,
                     std::size_t i3) const noexcept {
    const std::size_t d0 = dims_[0];
    const std::size_t d1 = dims_[1];
    const std::size_t d2 = dims_.size() > 2 ? dims_[2] : 1;
    return i0 + d0 * (i1 + d1 * (i2 + d2 * i3));
  }

  std::vector<std::size_t> dims_;
  std::vector<T> data_;
};

using CTensor = Tensor<cplx>;
using RTensor = Tensor<double>;

/// Mode-k unfolding: dims[mode] rows; columns enumerate the remaining indices
/// in increasing mode order with the lowest remaining mode fastest.
template <typename T>
Matrix<T> unfold(const Tensor<T>& t, std::size_t mode);

/// Inverse of unfold for the given target dims.
template <typename T>
Tensor<T> refold(const Matrix<T>& m, std::size_t mode, const std::vector<std::size_t>& dims);

/// t x_mode m: every mode-`mode` fiber is multiplied by m.
template <typename T>
Tensor<T> mode_product(const Tensor<T>& t, const Matrix<T>& m, std::size_t mode);

}  // namespace cdid
