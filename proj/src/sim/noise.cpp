#include "cdid/sim/noise.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cdid/sim/rng.hpp"

namespace cdid {

void NoiseSpec::validate() const {
  if (!(sigma_phi > 0.0 && sigma_phi <= 2.0)) {
    throw std::invalid_argument("sigma_phi must lie in (0, 2]");
  }
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
}

double noise_sigma(double sigma_phi, const RealField& amplitude) {
  if (amplitude.empty()) throw std::invalid_argument("noise_sigma: empty amplitude");
  const double mean = std::accumulate(amplitude.data().begin(), amplitude.data().end(), 0.0) /
                      static_cast<double>(amplitude.size());
  return sigma_phi * mean * std::sqrt(2.0);
}

ComplexField complex_noise(std::size_t height, std::size_t width, double sigma, std::uint64_t seed,
                           std::uint64_t run) {
  Rng rng = Rng::stream(seed, run);
  const double component = sigma / std::sqrt(2.0);
  ComplexField eps(height, width);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    eps[i] = cplx(component * re, component * im);
  }
  return eps;
}

NoisyObservation make_noisy(const TestScene& scene, const NoiseSpec& spec, std::size_t run) {
  spec.validate();
  NoisyObservation obs;
  obs.clean = scene.clean();
  obs.sigma = noise_sigma(spec.sigma_phi, scene.amplitude);
  obs.z = complex_noise(obs.clean.height(), obs.clean.width(), obs.sigma, spec.seed, run);
  for (std::size_t i = 0; i < obs.z.size(); ++i) obs.z[i] += obs.clean[i];
  return obs;
}

}  // namespace cdid
