#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cdid {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Upper-left grid position of a patch.
struct Coord {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Error carrying a short machine-readable code (used by file I/O and the CLI).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace cdid
