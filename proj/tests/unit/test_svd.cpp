#include <doctest.h>

#include <Eigen/SVD>

#include "cdid/svd.hpp"
#include "helpers.hpp"

using namespace cdid;

namespace {

double unitarity_error(const CMatrix& q) {
  return (q.adjoint() * q - CMatrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("svd") {

TEST_CASE("complex_svd agrees with an independent bidiagonal SVD") {
  Rng rng(2024);
  const std::vector<std::pair<int, int>> shapes = {{8, 8}, {8, 256}, {32, 8}, {1, 5}, {5, 1}, {16, 64}};
  for (auto [r, c] : shapes) {
    CAPTURE(r);
    CAPTURE(c);
    const CMatrix m = testutil::random_matrix(r, c, rng);
    const SvdResult s = complex_svd(m);
    const Eigen::Index k = std::min(r, c);
    REQUIRE(s.u.rows() == r);
    REQUIRE(s.u.cols() == k);
    REQUIRE(s.v.rows() == c);
    REQUIRE(s.v.cols() == k);

    const Eigen::BDCSVD<CMatrix> oracle(m);
    CHECK((s.s - oracle.singularValues()).cwiseAbs().maxCoeff() < 1e-11 * oracle.singularValues()(0));
    for (Eigen::Index i = 1; i < k; ++i) CHECK(s.s(i) <= s.s(i - 1));

    const CMatrix rebuilt = s.u * s.s.cast<cplx>().asDiagonal() * s.v.adjoint();
    CHECK((rebuilt - m).norm() / m.norm() < 1e-12);
    CHECK(unitarity_error(s.u) < 1e-12);
    CHECK(unitarity_error(s.v) < 1e-12);
  }
}

TEST_CASE("complex_svd pins the phase of each left singular vector") {
  Rng rng(8);
  const SvdResult s = complex_svd(testutil::random_matrix(6, 9, rng));
  for (Eigen::Index j = 0; j < s.u.cols(); ++j) {
    Eigen::Index imax = 0;
    s.u.col(j).cwiseAbs().maxCoeff(&imax);
    CHECK(std::abs(s.u(imax, j).imag()) < 1e-14);
    CHECK(s.u(imax, j).real() > 0.0);
  }
}

TEST_CASE("complex_svd handles rank-deficient input") {
  Rng rng(3);
  const CMatrix a = testutil::random_matrix(8, 2, rng);
  const CMatrix b = testutil::random_matrix(2, 12, rng);
  const SvdResult s = complex_svd(a * b);
  CHECK(s.s(1) > 1e-3);
  for (Eigen::Index i = 2; i < s.s.size(); ++i) CHECK(s.s(i) < 1e-12 * s.s(0));
  CHECK(((s.u * s.s.cast<cplx>().asDiagonal() * s.v.adjoint()) - a * b).norm() < 1e-12 * (a * b).norm());
}

TEST_CASE("complex_svd input validation") {
  CHECK_THROWS_AS(complex_svd(CMatrix(0, 3)), std::invalid_argument);
  CMatrix m = CMatrix::Ones(2, 2);
  m(0, 1) = {std::numeric_limits<double>::infinity(), 0.0};
  CHECK_THROWS_AS(complex_svd(m), std::invalid_argument);
  Rng rng(1);
  CHECK_THROWS_AS(complex_svd(testutil::random_matrix(6, 6, rng), 0), SvdNotConverged);
}

TEST_CASE("left_singular_basis spans the column space and is unitary") {
  Rng rng(44);
  const CMatrix a = testutil::random_matrix(8, 3, rng);
  const CMatrix m = a * testutil::random_matrix(3, 40, rng);
  const CMatrix q = left_singular_basis(m);
  REQUIRE(q.rows() == 8);
  REQUIRE(q.cols() == 8);
  CHECK(unitarity_error(q) < 1e-12);
  // The leading three columns carry the whole signal.
  const CMatrix lead = q.leftCols(3);
  CHECK((lead * (lead.adjoint() * m) - m).norm() < 1e-11 * m.norm());
  // Against the SVD's left vectors: same subspace, column by column up to phase.
  const SvdResult s = complex_svd(m);
  for (Eigen::Index j = 0; j < 3; ++j) {
    CHECK(std::abs(q.col(j).dot(s.u.col(j))) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("left_singular_basis of a zero matrix is the identity") {
  const RMatrix q = left_singular_basis(RMatrix(RMatrix::Zero(4, 7)));
  CHECK(q.isApprox(RMatrix::Identity(4, 4)));
  const CMatrix qc = left_singular_basis(CMatrix(CMatrix::Zero(3, 2)));
  CHECK(qc.isApprox(CMatrix::Identity(3, 3)));
}

TEST_CASE("complete_basis extends an orthonormal set deterministically") {
  RMatrix q = RMatrix::Zero(3, 3);
  q(0, 0) = 1.0 / std::sqrt(2.0);
  q(1, 0) = 1.0 / std::sqrt(2.0);
  complete_basis(q, 1);
  CHECK((q.transpose() * q - RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-14);
  RMatrix again = RMatrix::Zero(3, 3);
  again.col(0) = q.col(0);
  complete_basis(again, 1);
  CHECK(again == q);
}

}
