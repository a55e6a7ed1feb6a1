#include <doctest.h>

#include "cdid/sparsity.hpp"
#include "helpers.hpp"

using namespace cdid;

namespace {

PatchGroup random_group(Rng& rng, std::size_t j) {
  PatchGroup g;
  g.patches = testutil::random_tensor<cplx>({8, 8, j}, rng);
  for (std::size_t k = 0; k < j; ++k) g.coords.push_back({k, 2 * k});
  g.distances.assign(j, 0.0);
  return g;
}

}  // namespace

TEST_SUITE("sparsity") {

TEST_CASE("domain shapes per sparsity type") {
  Rng rng(1);
  const auto g = random_group(rng, 5);
  CHECK(std::get<CTensor>(to_domain(g, SparsityType::ComplexDomain)).dims() ==
        std::vector<std::size_t>{8, 8, 5});
  CHECK(std::get<RTensor>(to_domain(g, SparsityType::ReIm)).dims() ==
        std::vector<std::size_t>{8, 8, 5, 2});
  CHECK(std::get<RTensor>(to_domain(g, SparsityType::AmPhase)).dims() ==
        std::vector<std::size_t>{8, 8, 5, 2});
}

TEST_CASE("slab contents") {
  CTensor t({1, 1, 2}, {cplx{3.0, 4.0}, cplx{0.0, 0.0}});
  const auto reim = std::get<RTensor>(to_domain(t, SparsityType::ReIm));
  CHECK(reim(0, 0, 0, 0) == 3.0);
  CHECK(reim(0, 0, 0, 1) == 4.0);
  const auto amph = std::get<RTensor>(to_domain(t, SparsityType::AmPhase));
  CHECK(amph(0, 0, 0, 0) == 5.0);
  CHECK(amph(0, 0, 0, 1) == doctest::Approx(std::atan2(4.0, 3.0)));
  CHECK(amph(0, 0, 1, 1) == 0.0);
}

TEST_CASE("to_domain / from_domain round trip") {
  Rng rng(12);
  const auto g = random_group(rng, 7);
  for (auto s : {SparsityType::ComplexDomain, SparsityType::ReIm, SparsityType::AmPhase}) {
    const PatchGroup back = from_domain(to_domain(g, s), s, g);
    CHECK(testutil::max_abs_diff(back.patches, g.patches) < 1e-13);
    CHECK(back.coords == g.coords);
  }
}

TEST_CASE("amplitude slab is clamped at zero on the way back") {
  RTensor t({1, 1, 1, 2}, {-0.5, 1.0});
  CHECK(from_domain(DomainTensor{t}, SparsityType::AmPhase)[0] == cplx{});
}

TEST_CASE("from_domain rejects mismatched tensors") {
  CHECK_THROWS_AS(from_domain(DomainTensor{RTensor({2, 2, 2})}, SparsityType::ReIm), std::invalid_argument);
  CHECK_THROWS_AS(from_domain(DomainTensor{RTensor({2, 2, 2, 2})}, SparsityType::ComplexDomain),
                  std::invalid_argument);
}

TEST_CASE("analyze then synthesize reproduces the group") {
  Rng rng(77);
  const auto g = random_group(rng, 32);
  for (auto s : {SparsityType::ComplexDomain, SparsityType::ReIm, SparsityType::AmPhase}) {
    const GroupSpectrum spec = analyze_group(g, s);
    CHECK(spec.coords == g.coords);
    const PatchGroup back = synthesize_group(spec, 8, 8);
    CHECK(testutil::max_abs_diff(back.patches, g.patches) < 1e-11);
  }
}

}
