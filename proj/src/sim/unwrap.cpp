#include "cdid/sim/unwrap.hpp"

#include "cdid/sim/wrap.hpp"

namespace cdid {

namespace {

// Wrapped increment in (-pi, pi].
double step(double from, double to) {
  const double d = wrap(to - from);
  return d == -kPi ? kPi : d;
}

}  // namespace

RealField unwrap_simple(const RealField& wrapped) {
  RealField out(wrapped.height(), wrapped.width());
  if (wrapped.empty()) return out;
  out(0, 0) = wrapped(0, 0);
  for (std::size_t r = 1; r < wrapped.height(); ++r) {
    out(r, 0) = out(r - 1, 0) + step(wrapped(r - 1, 0), wrapped(r, 0));
  }
  for (std::size_t r = 0; r < wrapped.height(); ++r) {
    for (std::size_t c = 1; c < wrapped.width(); ++c) {
      out(r, c) = out(r, c - 1) + step(wrapped(r, c - 1), wrapped(r, c));
    }
  }
  return out;
}

}  // namespace cdid
