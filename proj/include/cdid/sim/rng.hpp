#pragma once

#include <cstdint>
#include <random>

namespace cdid {

/// Seedable normal/uniform source with a fully specified output sequence:
/// mt19937_64 bits, 53-bit uniforms and Box-Muller normals, so results do
/// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for one Monte-Carlo run.
  static Rng stream(std::uint64_t seed, std::uint64_t run);

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cdid
