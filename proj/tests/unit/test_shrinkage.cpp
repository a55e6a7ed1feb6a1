#include <doctest.h>

#include <cmath>

#include "cdid/shrinkage.hpp"
#include "helpers.hpp"

using namespace cdid;

namespace {

// Grid minimiser of 0.5 (x - y)^2 + alpha * pen(y) over y in [lo, hi].
template <typename Pen>
double grid_prox(double x, double alpha, Pen pen, double lo, double hi, int points) {
  double best_y = lo;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double y = lo + (hi - lo) * i / (points - 1);
    const double v = 0.5 * (x - y) * (x - y) + alpha * pen(y);
    if (v < best) {
      best = v;
      best_y = y;
    }
  }
  return best_y;
}

}  // namespace

TEST_SUITE("shrinkage") {

TEST_CASE("universal threshold value") {
  // sqrt(2 ln 2048) for an 8 x 8 x 32 group.
  CHECK(universal_threshold({1.0, 1.0, ThresholdMode::Hard, 8 * 8 * 32}) ==
        doctest::Approx(3.905027269087733).epsilon(1e-14));
  CHECK(universal_threshold({2.5, 0.2, ThresholdMode::Soft, 100}) ==
        doctest::Approx(2.5 * 0.2 * std::sqrt(2.0 * std::log(100.0))).epsilon(1e-14));
  CHECK(universal_threshold({1.0, 1.0, ThresholdMode::Hard, 1}) == 0.0);
  CHECK_THROWS(universal_threshold({0.0, 1.0, ThresholdMode::Hard, 10}));
  CHECK_THROWS(universal_threshold({1.0, -1.0, ThresholdMode::Hard, 10}));
  CHECK_THROWS(universal_threshold({1.0, 1.0, ThresholdMode::Hard, 0}));
}

TEST_CASE("hard thresholding keeps survivors untouched") {
  CTensor t({2, 2}, {cplx{3, 4}, cplx{0.1, 0}, cplx{0, -2}, cplx{1, 1}});
  const auto r = hard_threshold_complex(t, 2.0);
  CHECK(r.core[0] == cplx{3, 4});
  CHECK(r.core[1] == cplx{});
  CHECK(r.core[2] == cplx{0, -2});  // |s| == delta survives
  CHECK(r.core[3] == cplx{});
  CHECK(r.retained == 2);
}

TEST_CASE("soft thresholding shrinks the modulus and keeps the phase") {
  CTensor t({2, 1}, {cplx{3, 4}, cplx{0.6, 0.8}});
  const auto r = soft_threshold_complex(t, 2.0);
  CHECK(std::abs(r.core[0] - cplx{1.8, 2.4}) < 1e-15);
  CHECK(r.core[1] == cplx{});
  CHECK(r.retained == 1);
  RTensor rt({3, 1}, {-5.0, 0.5, 2.5});
  const auto rr = soft_threshold_real(rt, 1.0);
  CHECK(rr.core[0] == -4.0);
  CHECK(rr.core[1] == 0.0);
  CHECK(rr.core[2] == 1.5);
}

TEST_CASE("real thresholds match grid-search proximal maps") {
  Rng rng(5);
  for (int n = 0; n < 60; ++n) {
    const double x = 4.0 * rng.normal();
    const double alpha = 0.05 + 2.0 * rng.uniform();
    const double h = 1e-3;
    const double hard_y = grid_prox(x, alpha, [](double y) { return y == 0.0 ? 0.0 : 1.0; }, -20, 20, 40001);
    const double soft_y = grid_prox(x, alpha, [](double y) { return std::abs(y); }, -20, 20, 40001);
    RTensor t({1, 1}, {x});
    CHECK(std::abs(hard_threshold_real(t, std::sqrt(2.0 * alpha)).core[0] - hard_y) <= h);
    CHECK(std::abs(soft_threshold_real(t, alpha).core[0] - soft_y) <= h);
  }
}

TEST_CASE("negative delta is rejected") {
  CHECK_THROWS(hard_threshold_real(RTensor({1, 1}), -1.0));
}

TEST_CASE("Wiener attenuation formula") {
  CTensor noisy({3, 1}, {cplx{1, 1}, cplx{2, 0}, cplx{5, 5}});
  CTensor pilot({3, 1}, {cplx{0, 2}, cplx{0, 0}, cplx{1, 0}});
  const double sigma = 2.0;
  const auto r = wiener_attenuate(noisy, pilot, sigma);
  const double w0 = 4.0 / (4.0 + 4.0);
  const double w2 = 1.0 / (1.0 + 4.0);
  CHECK(std::abs(r.core[0] - w0 * cplx{1, 1}) < 1e-15);
  CHECK(r.core[1] == cplx{});
  CHECK(std::abs(r.core[2] - w2 * cplx{5, 5}) < 1e-15);
  CHECK(r.weight_energy == doctest::Approx(w0 * w0 + w2 * w2));

  CHECK_THROWS(wiener_attenuate(noisy, CTensor({2, 1}), 1.0));
  // Zero noise passes every coefficient with a nonzero pilot.
  const auto exact = wiener_attenuate(noisy, pilot, 0.0);
  CHECK(exact.core[0] == noisy[0]);
}

TEST_CASE("attenuation factors lie in [0, 1] and grow with pilot energy") {
  Rng rng(8);
  const auto noisy = testutil::random_tensor<double>({4, 4}, rng);
  RTensor pilot({4, 4});
  for (std::size_t i = 0; i < pilot.size(); ++i) pilot[i] = 0.25 * static_cast<double>(i);
  const auto r = wiener_attenuate(noisy, pilot, 1.0);
  double prev = -1.0;
  for (std::size_t i = 0; i < noisy.size(); ++i) {
    const double w = noisy[i] == 0.0 ? 0.0 : r.core[i] / noisy[i];
    CHECK(w >= 0.0);
    CHECK(w < 1.0);
    CHECK(w >= prev);
    prev = w;
  }
}

}
