#pragma once

#include <cstdint>

#include "cdid/sim/scenes.hpp"

namespace cdid {

struct NoiseSpec {
  double sigma_phi = 0.1;  // target phase-noise std, radians
  std::uint64_t seed = 0;
  std::size_t runs = 1;

  void validate() const;
};

/// Complex noise std: sigma_phi * mean(amplitude) * sqrt(2).
double noise_sigma(double sigma_phi, const RealField& amplitude);

struct NoisyObservation {
  ComplexField clean;
  ComplexField z;
  double sigma = 0.0;
};

/// z = a*exp(j*phi) + eps with eps_I, eps_Q iid N(0, sigma^2 / 2), drawn from
/// Rng::stream(spec.seed, run) in row-major order (I then Q per pixel).
NoisyObservation make_noisy(const TestScene& scene, const NoiseSpec& spec, std::size_t run = 0);

/// Circular complex Gaussian noise field of total variance sigma^2.
ComplexField complex_noise(std::size_t height, std::size_t width, double sigma, std::uint64_t seed,
                           std::uint64_t run);

}  // namespace cdid
