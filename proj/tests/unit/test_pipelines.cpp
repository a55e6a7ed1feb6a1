#include <doctest.h>

#include <cstdlib>
#include <cstring>

#include "cdid/pipelines.hpp"
#include "cdid/sim/metrics.hpp"
#include "cdid/sim/noise.hpp"
#include "cdid/sim/scenes.hpp"
#include "helpers.hpp"

using namespace cdid;

namespace {

FilterConfig small_config(double sigma) {
  FilterConfig cfg;
  cfg.sigma = sigma;
  cfg.search_window = 15;
  cfg.j_max = 16;
  return cfg;
}

NoisyObservation small_observation(std::uint64_t seed, double sigma_phi = 0.2) {
  const auto scene = build_scene("gauss", truncated_gauss_source(40), PhaseKind::Interferometric);
  return make_noisy(scene, {sigma_phi, seed, 1});
}

bool bitwise_equal(const ComplexField& a, const ComplexField& b) {
  if (!a.same_shape(b)) return false;
  return std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(cplx)) == 0;
}

}  // namespace

TEST_SUITE("pipelines") {

TEST_CASE("parallel and serial reference agree bitwise") {
  const auto obs = small_observation(3);
  for (const auto& name : algorithm_names()) {
    CAPTURE(name);
    FilterConfig cfg = small_config(obs.sigma);
    const ComplexField ref = run_named_algorithm(obs.z, name, cfg, {Execution::SerialReference, {}});
    for (int threads : {1, 3, 4}) {
      cfg.threads = threads;
      CHECK(bitwise_equal(run_named_algorithm(obs.z, name, cfg), ref));
    }
  }
}

TEST_CASE("output is the weighted mean of the emitted group estimates") {
  const auto obs = small_observation(4);
  const FilterConfig cfg = small_config(obs.sigma);
  ComplexField num(obs.z.height(), obs.z.width());
  RealField den(obs.z.height(), obs.z.width());
  std::size_t groups = 0;
  RunOptions opts;
  opts.on_group = [&](const GroupEstimate& e) {
    ++groups;
    CHECK(e.weight > 0.0);
    for (std::size_t k = 0; k < e.coords.size(); ++k)
      for (std::size_t i = 0; i < cfg.n1; ++i)
        for (std::size_t j = 0; j < cfg.n2; ++j) {
          num(e.coords[k].row + i, e.coords[k].col + j) += e.weight * e.patches(i, j, k);
          den(e.coords[k].row + i, e.coords[k].col + j) += e.weight;
        }
  };
  const ComplexField out = cdf_ht(obs.z, cfg, opts);
  CHECK(groups == reference_positions(40, 40, cfg).size());
  double worst = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) worst = std::max(worst, std::abs(out[i] - num[i] / den[i]));
  CHECK(worst < 1e-13);
}

TEST_CASE("zero noise level returns the input") {
  Rng rng(10);
  const ComplexField z = testutil::random_field(24, 24, rng);
  const FilterConfig cfg = small_config(0.0);
  for (const auto& name : algorithm_names()) {
    CAPTURE(name);
    const ComplexField u = run_named_algorithm(z, name, cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) worst = std::max(worst, std::abs(u[i] - z[i]));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("a constant field is a fixed point of thresholding") {
  const ComplexField z(20, 20, std::polar(1.3, 0.7));
  for (const auto& name : algorithm_names()) {
    CAPTURE(name);
    const ComplexField u = run_named_algorithm(z, name, small_config(0.2));
    double worst = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) worst = std::max(worst, std::abs(u[i] - z[i]));
    // The Wiener stage scales the single surviving coefficient by
    // |p|^2 / (|p|^2 + sigma^2), which is 1 only in the limit.
    CHECK(worst < (parse_algorithm(name).plan == StagePlan::Wiener ? 1e-4 : 1e-10));
  }
}

TEST_CASE("iterative schedule runs three passes starting from z") {
  const auto obs = small_observation(6);
  std::vector<std::pair<std::size_t, double>> calls;
  bool first_is_z = false;
  cdf_iterative(obs.z, small_config(obs.sigma), [&](std::size_t t, const ComplexField& v, double d) {
    calls.emplace_back(t, d);
    if (t == 1) first_is_z = bitwise_equal(v, obs.z);
  });
  REQUIRE(calls.size() == 3);
  CHECK(first_is_z);
  CHECK(calls[0] == std::pair<std::size_t, double>{1, 0.9});
  CHECK(calls[1] == std::pair<std::size_t, double>{2, 0.5});
  CHECK(calls[2] == std::pair<std::size_t, double>{3, 0.4});
}

TEST_CASE("absolute delta semantics hands delta straight to the threshold") {
  const auto obs = small_observation(7);
  FilterConfig cfg = small_config(obs.sigma);
  cfg.iter_schedule = {{1.0, 0.05}};
  cfg.delta_semantics = DeltaSemantics::Absolute;
  const ComplexField a = cdf_iterative(obs.z, cfg);
  const ComplexField b = cdf_ht(obs.z, cfg, ThresholdLevel{1.0, 0.05});
  CHECK(bitwise_equal(a, b));
}

TEST_CASE("filters reduce the phase error of a noisy scene") {
  const auto scene = build_scene("gauss", truncated_gauss_source(48), PhaseKind::Interferometric);
  const auto obs = make_noisy(scene, {0.3, 1, 1});
  const double noisy = psnr_phi(phase_of(obs.z), scene.phase);
  for (const char* name : {"cd-ht", "imre-wi", "pham-it"}) {
    CAPTURE(name);
    FilterConfig cfg;
    cfg.sigma = obs.sigma;
    CHECK(psnr_phi(phase_of(run_named_algorithm(obs.z, name, cfg)), scene.phase) > noisy + 3.0);
  }
}

TEST_CASE("aggregation rejects uncovered pixels") {
  AggregationBuffers agg(4, 4);
  GroupEstimate e{{Coord{0, 0}}, CTensor({2, 2, 1}), 1.0};
  agg.add(e);
  CHECK_THROWS_AS(agg.finalize(), std::logic_error);
}

TEST_CASE("errors inside parallel workers reach the caller") {
  Rng rng(1);
  const ComplexField z = testutil::random_field(12, 12, rng);
  FilterConfig cfg = small_config(1.0);
  CHECK_THROWS_AS(cdf_wiener(z, ComplexField(12, 11), cfg), std::invalid_argument);
  cfg.n1 = 16;
  CHECK_THROWS_AS(cdf_ht(z, cfg), std::invalid_argument);
}

TEST_CASE("algorithm names") {
  CHECK(algorithm_names().size() == 9);
  CHECK(parse_algorithm("imre-it").sparsity == SparsityType::ReIm);
  CHECK(parse_algorithm("pham-wi").plan == StagePlan::Wiener);
  CHECK_THROWS_AS(parse_algorithm("imre"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algorithm("xx-ht"), std::invalid_argument);
}

TEST_CASE("CDID_THREADS caps the worker count") {
  FilterConfig cfg;
  cfg.threads = 8;
  ::setenv("CDID_THREADS", "2", 1);
  CHECK(resolve_threads(cfg) == 2);
  ::unsetenv("CDID_THREADS");
  CHECK(resolve_threads(cfg) == 8);
}

}
