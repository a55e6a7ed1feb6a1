#pragma once

#include <cmath>

#include "cdid/field.hpp"
#include "cdid/types.hpp"

namespace cdid {

/// Principal value of phi in the half-open interval [-pi, pi).
inline double wrap(double phi) noexcept {
  double r = phi - kTwoPi * std::floor((phi + kPi) / kTwoPi);
  // floor() can land one period off when phi + pi is a hair below a multiple of 2*pi.
  if (r >= kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  return r;
}

inline RealField wrap(const RealField& phi) {
  RealField out(phi.height(), phi.width());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = wrap(phi[i]);
  return out;
}

}  // namespace cdid
