#include "cdid/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace cdid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const cplx& v) { return std::abs(v); }

// Unit factor that rotates x onto the positive real axis.
inline double unit_towards_positive(double x) { return x < 0.0 ? -1.0 : 1.0; }
inline cplx unit_towards_positive(const cplx& x) {
  const double a = std::abs(x);
  return a == 0.0 ? cplx(1.0, 0.0) : std::conj(x) / a;
}

}  // namespace

template <typename T>
void complete_basis(Matrix<T>& q, Eigen::Index rank) {
  const Eigen::Index n = q.rows();
  Eigen::Index filled = rank;
  for (Eigen::Index e = 0; e < n && filled < q.cols(); ++e) {
    Eigen::Matrix<T, Eigen::Dynamic, 1> v = Eigen::Matrix<T, Eigen::Dynamic, 1>::Zero(n);
    v(e) = T(1);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < filled; ++j) {
        v -= q.col(j) * q.col(j).dot(v);
      }
    }
    const double nrm = v.norm();
    if (nrm > 1e-6) q.col(filled++) = v / nrm;
  }
}

template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, 1> normalize_column_phases(Matrix<T>& q) {
  Eigen::Matrix<T, Eigen::Dynamic, 1> applied(q.cols());
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
      const double mag = magnitude(q(i, j));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    const T f = unit_towards_positive(q(best, j));
    q.col(j) *= f;
    q(best, j) = T(magnitude(q(best, j)));  // kill rounding residue in the pivot
    applied(j) = f;
  }
  return applied;
}

template <typename T>
Matrix<T> left_singular_basis(const Matrix<T>& m) {
  const Eigen::Index n = m.rows();
  const Matrix<T> gram = m * m.adjoint();
  const double scale = gram.diagonal().real().maxCoeff();
  if (!(scale > 0.0)) return Matrix<T>::Identity(n, n);

  Eigen::SelfAdjointEigenSolver<Matrix<T>> es(gram);
  if (es.info() != Eigen::Success) {
    throw SvdNotConverged("Hermitian eigensolver failed on a Gram matrix of size " +
                          std::to_string(n));
  }
  const auto& evals = es.eigenvalues();
  const auto& evecs = es.eigenvectors();
  const double lam_max = evals(n - 1);
  const double cutoff = 64.0 * static_cast<double>(n) * kEps * lam_max;

  Matrix<T> q(n, n);
  Eigen::Index rank = 0;
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    if (evals(j) <= cutoff) break;
    q.col(rank++) = evecs.col(j);
  }
  complete_basis(q, rank);
  normalize_column_phases(q);
  return q;
}

SvdResult complex_svd(const CMatrix& m, int max_sweeps) {
  if (m.size() == 0) throw std::invalid_argument("complex_svd: empty matrix");
  if (!m.allFinite()) throw std::invalid_argument("complex_svd: matrix has non-finite entries");

  if (m.rows() < m.cols()) {
    SvdResult r = complex_svd(m.adjoint(), max_sweeps);
    SvdResult out{std::move(r.v), std::move(r.s), std::move(r.u)};
    const auto f = normalize_column_phases(out.u);
    for (Eigen::Index j = 0; j < out.v.cols(); ++j) out.v.col(j) *= f(j);
    return out;
  }

  const Eigen::Index rows = m.rows();
  const Eigen::Index n = m.cols();
  CMatrix a = m;
  CMatrix v = CMatrix::Identity(n, n);
  const double tol = kEps * static_cast<double>(rows);

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const cplx gamma = a.col(p).dot(a.col(q));
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
        converged = false;

        const cplx back = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Eigen::Index i = 0; i < rows; ++i) {
          const cplx x = a(i, p);
          const cplx y = a(i, q) * back;
          a(i, p) = c * x - s * y;
          a(i, q) = s * x + c * y;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const cplx x = v(i, p);
          const cplx y = v(i, q) * back;
          v(i, p) = c * x - s * y;
          v(i, q) = s * x + c * y;
        }
      }
    }
  }
  if (!converged) {
    throw SvdNotConverged("complex_svd: no convergence after " + std::to_string(max_sweeps) +
                          " Jacobi sweeps");
  }

  Eigen::VectorXd norms(n);
  for (Eigen::Index j = 0; j < n; ++j) norms(j) = a.col(j).norm();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return norms(x) > norms(y); });

  SvdResult out;
  out.s.resize(n);
  out.u.resize(rows, n);
  out.v.resize(n, n);
  const double s_max = norms(order.front());
  const double null_cut = s_max * 1e-13;
  Eigen::Index rank = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.s(j) = norms(src);
    out.v.col(j) = v.col(src);
    if (norms(src) > null_cut && s_max > 0.0) {
      out.u.col(j) = a.col(src) / norms(src);
      ++rank;
    }
  }
  complete_basis(out.u, rank);
  const auto f = normalize_column_phases(out.u);
  for (Eigen::Index j = 0; j < n; ++j) out.v.col(j) *= f(j);
  return out;
}

template void complete_basis(Matrix<double>&, Eigen::Index);
template void complete_basis(Matrix<cplx>&, Eigen::Index);
template Eigen::Matrix<double, Eigen::Dynamic, 1> normalize_column_phases(Matrix<double>&);
template Eigen::Matrix<cplx, Eigen::Dynamic, 1> normalize_column_phases(Matrix<cplx>&);
template Matrix<double> left_singular_basis(const Matrix<double>&);
template Matrix<cplx> left_singular_basis(const Matrix<cplx>&);

}  // namespace cdid
