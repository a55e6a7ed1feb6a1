#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "cdid/tensor.hpp"

namespace cdid {

/// Thin SVD m = U diag(s) V^H with k = min(rows, cols) components.
///
/// U is rows x k, V is cols x k, both with orthonormal columns (square and
/// unitary when m is square). Singular values are nonincreasing. The
/// largest-magnitude entry of each column of U is real and positive.
struct SvdResult {
  CMatrix u;
  Eigen::VectorXd s;
  CMatrix v;
};

class SvdNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One-sided (Hestenes) Jacobi SVD. Throws SvdNotConverged when the sweep cap
/// is reached before every column pair is orthogonal to working precision.
SvdResult complex_svd(const CMatrix& m, int max_sweeps = 60);

/// Full square basis of left singular vectors of m (rows x rows), ordered by
/// nonincreasing singular value.
///
/// Computed from the Hermitian eigendecomposition of m m^H. Directions with
/// numerically zero singular value are replaced by a deterministic completion
/// built from identity columns, so an all-zero m yields the identity.
template <typename T>
Matrix<T> left_singular_basis(const Matrix<T>& m);

/// Extends the first `rank` orthonormal columns of q to a full orthonormal
/// basis by Gram-Schmidt over e_0, e_1, ... in order.
template <typename T>
void complete_basis(Matrix<T>& q, Eigen::Index rank);

/// Rotates each column so its largest-magnitude entry is real and positive.
/// Returns the unit factors applied (one per column).
template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, 1> normalize_column_phases(Matrix<T>& q);

}  // namespace cdid
