#include "cdid/hosvd.hpp"

#include <stdexcept>

#include "cdid/svd.hpp"

namespace cdid {

namespace {

template <typename T>
void check_factors(const std::vector<std::size_t>& dims, const std::vector<Matrix<T>>& factors) {
  if (factors.size() != dims.size()) {
    throw std::invalid_argument("HOSVD: need one factor per mode");
  }
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto n = static_cast<Eigen::Index>(dims[k]);
    if (factors[k].rows() != n || factors[k].cols() != n) {
      throw std::invalid_argument("HOSVD: factor extents do not match core dims");
    }
  }
}

}  // namespace

template <typename T>
HosvdFactors<T> hosvd(const Tensor<T>& t) {
  if (t.order() != 3 && t.order() != 4) {
    throw std::invalid_argument("hosvd: tensor order must be 3 or 4");
  }
  HosvdFactors<T> out;
  out.factors.reserve(t.order());
  for (std::size_t k = 0; k < t.order(); ++k) {
    if (k == 0) {
      // Mode-0 unfolding is the raw buffer.
      Eigen::Map<const Matrix<T>> m0(t.data().data(), static_cast<Eigen::Index>(t.dim(0)),
                                     static_cast<Eigen::Index>(t.size() / t.dim(0)));
      out.factors.push_back(left_singular_basis<T>(m0));
    } else {
      out.factors.push_back(left_singular_basis<T>(unfold(t, k)));
    }
  }
  out.core = hosvd_analysis(t, out.factors);
  return out;
}

template <typename T>
Tensor<T> hosvd_analysis(const Tensor<T>& t, const std::vector<Matrix<T>>& factors) {
  check_factors(t.dims(), factors);
  Tensor<T> s = mode_product(t, Matrix<T>(factors[0].adjoint()), 0);
  for (std::size_t k = 1; k < t.order(); ++k) {
    s = mode_product(s, Matrix<T>(factors[k].adjoint()), k);
  }
  return s;
}

template <typename T>
Tensor<T> hosvd_synthesis(const Tensor<T>& core, const std::vector<Matrix<T>>& factors) {
  check_factors(core.dims(), factors);
  Tensor<T> u = mode_product(core, factors[0], 0);
  for (std::size_t k = 1; k < core.order(); ++k) u = mode_product(u, factors[k], k);
  return u;
}

template <typename T>
Tensor<T> hosvd_synthesis(const HosvdFactors<T>& f) {
  return hosvd_synthesis(f.core, f.factors);
}

template HosvdFactors<double> hosvd(const Tensor<double>&);
template HosvdFactors<cplx> hosvd(const Tensor<cplx>&);
template Tensor<double> hosvd_analysis(const Tensor<double>&, const std::vector<Matrix<double>>&);
template Tensor<cplx> hosvd_analysis(const Tensor<cplx>&, const std::vector<Matrix<cplx>>&);
template Tensor<double> hosvd_synthesis(const Tensor<double>&, const std::vector<Matrix<double>>&);
template Tensor<cplx> hosvd_synthesis(const Tensor<cplx>&, const std::vector<Matrix<cplx>>&);
template Tensor<double> hosvd_synthesis(const HosvdFactors<double>&);
template Tensor<cplx> hosvd_synthesis(const HosvdFactors<cplx>&);

}  // namespace cdid
