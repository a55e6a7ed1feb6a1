#include "cdid/tensor.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cdid {

namespace {

std::size_t checked_volume(const std::vector<std::size_t>& dims) {
  if (dims.size() < 2 || dims.size() > 4) {
    throw std::invalid_argument("tensor order must be 2, 3 or 4, got " + std::to_string(dims.size()));
  }
  std::size_t n = 1;
  for (auto d : dims) {
    if (d == 0) throw std::invalid_argument("tensor extents must be positive");
    n *= d;
  }
  return n;
}

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

struct ModeSplit {
  std::size_t inner;  // product of extents below the mode
  std::size_t extent;
  std::size_t outer;  // product of extents above the mode
};

ModeSplit split(const std::vector<std::size_t>& dims, std::size_t mode) {
  if (mode >= dims.size()) {
    throw std::out_of_range("mode " + std::to_string(mode) + " out of range for order " +
                            std::to_string(dims.size()));
  }
  ModeSplit s{1, dims[mode], 1};
  for (std::size_t k = 0; k < mode; ++k) s.inner *= dims[k];
  for (std::size_t k = mode + 1; k < dims.size(); ++k) s.outer *= dims[k];
  return s;
}

}  // namespace

template <typename T>
Tensor<T>::Tensor(std::vector<std::size_t> dims)
    : dims_(std::move(dims)), data_(checked_volume(dims_), T{}) {}

template <typename T>
Tensor<T>::Tensor(std::vector<std::size_t> dims, std::vector<T> data)
    : dims_(std::move(dims)), data_(std::move(data)) {
  if (checked_volume(dims_) != data_.size()) {
    throw std::invalid_argument("tensor data length does not match its extents");
  }
  for (const auto& v : data_) {
    if (!is_finite(v)) throw std::invalid_argument("tensor contains a non-finite value");
  }
}

template <typename T>
std::size_t Tensor<T>::stride(std::size_t k) const {
  return split(dims_, k).inner;
}

template <typename T>
double Tensor<T>::norm() const noexcept {
  double acc = 0.0;
  for (const auto& v : data_) acc += std::norm(v);
  return std::sqrt(acc);
}

template <typename T>
Matrix<T> unfold(const Tensor<T>& t, std::size_t mode) {
  const auto s = split(t.dims(), mode);
  Matrix<T> m(static_cast<Eigen::Index>(s.extent), static_cast<Eigen::Index>(s.inner * s.outer));
  const auto src = t.data();
  for (std::size_t b = 0; b < s.outer; ++b) {
    for (std::size_t i = 0; i < s.extent; ++i) {
      const T* p = src.data() + s.inner * (i + s.extent * b);
      for (std::size_t a = 0; a < s.inner; ++a) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a + s.inner * b)) = p[a];
      }
    }
  }
  return m;
}

template <typename T>
Tensor<T> refold(const Matrix<T>& m, std::size_t mode, const std::vector<std::size_t>& dims) {
  Tensor<T> t(dims);
  const auto s = split(dims, mode);
  if (static_cast<std::size_t>(m.rows()) != s.extent ||
      static_cast<std::size_t>(m.cols()) != s.inner * s.outer) {
    throw std::invalid_argument("refold: matrix shape does not match target dims");
  }
  auto dst = t.data();
  for (std::size_t b = 0; b < s.outer; ++b) {
    for (std::size_t i = 0; i < s.extent; ++i) {
      T* p = dst.data() + s.inner * (i + s.extent * b);
      for (std::size_t a = 0; a < s.inner; ++a) {
        p[a] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a + s.inner * b));
      }
    }
  }
  return t;
}

template <typename T>
Tensor<T> mode_product(const Tensor<T>& t, const Matrix<T>& m, std::size_t mode) {
  const auto s = split(t.dims(), mode);
  if (static_cast<std::size_t>(m.cols()) != s.extent) {
    throw std::invalid_argument("mode_product: matrix has " + std::to_string(m.cols()) +
                                " columns, mode extent is " + std::to_string(s.extent));
  }
  auto dims = t.dims();
  dims[mode] = static_cast<std::size_t>(m.rows());
  Tensor<T> out(dims);

  using Block = Eigen::Map<Matrix<T>>;
  using ConstBlock = Eigen::Map<const Matrix<T>>;
  const auto in_cols = static_cast<Eigen::Index>(s.extent);
  const auto out_cols = m.rows();
  const auto inner = static_cast<Eigen::Index>(s.inner);
  const Matrix<T> mt = m.transpose();
  for (std::size_t b = 0; b < s.outer; ++b) {
    // Each outer slice is an (inner x extent) column-major block.
    ConstBlock src(t.data().data() + b * s.inner * s.extent, inner, in_cols);
    Block dst(out.data().data() + b * s.inner * static_cast<std::size_t>(out_cols), inner, out_cols);
    dst.noalias() = src * mt;
  }
  return out;
}

template class Tensor<double>;
template class Tensor<cplx>;

template Matrix<double> unfold(const Tensor<double>&, std::size_t);
template Matrix<cplx> unfold(const Tensor<cplx>&, std::size_t);
template Tensor<double> refold(const Matrix<double>&, std::size_t, const std::vector<std::size_t>&);
template Tensor<cplx> refold(const Matrix<cplx>&, std::size_t, const std::vector<std::size_t>&);
template Tensor<double> mode_product(const Tensor<double>&, const Matrix<double>&, std::size_t);
template Tensor<cplx> mode_product(const Tensor<cplx>&, const Matrix<cplx>&, std::size_t);

}  // namespace cdid
