#include "cdid/sim/scenes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace cdid {

ComplexField TestScene::clean() const {
  ComplexField u(phase.height(), phase.width());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::polar(amplitude[i], phase[i]);
  return u;
}

TestScene build_scene(const std::string& name, const RealField& phase_source, PhaseKind kind,
                      double absolute_span) {
  if (phase_source.empty()) throw std::invalid_argument("build_scene: empty phase source");
  const auto [lo_it, hi_it] = std::minmax_element(phase_source.data().begin(), phase_source.data().end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo)) throw std::invalid_argument("build_scene: constant phase source cannot be rescaled");

  double span = kPi / 2.0;
  if (kind == PhaseKind::Absolute) {
    if (!(absolute_span > 0.0)) throw std::invalid_argument("build_scene: absolute span must be positive");
    span = absolute_span;
  }

  TestScene s;
  s.name = name;
  s.kind = kind;
  s.phase = RealField(phase_source.height(), phase_source.width());
  double sum = 0.0;
  for (std::size_t i = 0; i < s.phase.size(); ++i) {
    // The extremes map exactly to 0 and span.
    s.phase[i] = phase_source[i] == hi ? span : (phase_source[i] - lo) / (hi - lo) * span;
    sum += s.phase[i];
  }
  const double mean = sum / static_cast<double>(s.phase.size());
  if (!(mean > 0.0)) throw std::invalid_argument("build_scene: amplitude constraints are unsolvable");

  // a = 0.5 + slope * phi hits min 0.5 at phi = 0 and mean 1.0.
  const double slope = 0.5 / mean;
  s.amplitude = RealField(s.phase.height(), s.phase.width());
  for (std::size_t i = 0; i < s.phase.size(); ++i) s.amplitude[i] = 0.5 + slope * s.phase[i];
  return s;
}

namespace {

double centered(std::size_t i, std::size_t size) {
  return (static_cast<double>(i) - 0.5 * static_cast<double>(size - 1)) / static_cast<double>(size);
}

}  // namespace

RealField truncated_gauss_source(std::size_t size) {
  constexpr double rho = 0.3;
  constexpr double plateau = 0.6;
  RealField f(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const double y = centered(r, size);
      const double x = centered(c, size);
      f(r, c) = std::min(std::exp(-(x * x + y * y) / (rho * rho)), plateau);
    }
  }
  return f;
}

RealField hills_source(std::size_t size) {
  struct Bump {
    double row, col, width, height;
  };
  constexpr std::array<Bump, 4> bumps{{{0.30, 0.30, 0.16, 1.0},
                                       {0.35, 0.70, 0.20, 0.8},
                                       {0.72, 0.35, 0.14, 0.6},
                                       {0.70, 0.68, 0.18, 0.9}}};
  RealField f(size, size);
  const double n = static_cast<double>(size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      double v = 0.0;
      for (const auto& b : bumps) {
        const double dy = static_cast<double>(r) / n - b.row;
        const double dx = static_cast<double>(c) / n - b.col;
        v += b.height * std::exp(-(dx * dx + dy * dy) / (b.width * b.width));
      }
      f(r, c) = v;
    }
  }
  return f;
}

RealField builtin_source(const std::string& name, std::size_t size) {
  if (size < 2) throw std::invalid_argument("scene size must be at least 2");
  if (name == "gauss") return truncated_gauss_source(size);
  if (name == "hills") return hills_source(size);
  throw std::invalid_argument("unknown built-in scene '" + name + "'");
}

double default_absolute_span(const std::string& name) {
  if (name == "gauss") return 16.0 * kPi;
  if (name == "hills") return 20.0 * kPi;
  throw std::invalid_argument("no default absolute phase span for scene '" + name + "'");
}

std::string to_string(PhaseKind k) { return k == PhaseKind::Interferometric ? "interf" : "abs"; }

PhaseKind parse_phase_kind(const std::string& s) {
  if (s == "interf") return PhaseKind::Interferometric;
  if (s == "abs") return PhaseKind::Absolute;
  throw std::invalid_argument("unknown phase kind '" + s + "' (expected interf or abs)");
}

}  // namespace cdid
