#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cdid/types.hpp"

namespace cdid {

/// Row-major 2D grid of samples.
template <typename T>
class Field {
 public:
  using value_type = T;

  Field() = default;
  Field(std::size_t height, std::size_t width, T fill = T{})
      : height_(height), width_(width), data_(height * width, fill) {}
  Field(std::size_t height, std::size_t width, std::vector<T> data)
      : height_(height), width_(width), data_(std::move(data)) {
    if (data_.size() != height_ * width_) {
      throw std::invalid_argument("field data length does not match height*width");
    }
  }

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * width_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * width_ + c]; }
  T& operator[](std::size_t i) noexcept { return data_[i]; }
  const T& operator[](std::size_t i) const noexcept { return data_[i]; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  bool same_shape(const auto& other) const noexcept {
    return height_ == other.height() && width_ == other.width();
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<T> data_;
};

using ComplexField = Field<cplx>;
using RealField = Field<double>;

}  // namespace cdid
