#pragma once

#include <string>

#include "cdid/field.hpp"

namespace cdid {

enum class PhaseKind { Interferometric, Absolute };

/// Phase/amplitude pair defining a clean complex test object a * exp(j*phi).
struct TestScene {
  RealField phase;      // radians
  RealField amplitude;  // dimensionless
  PhaseKind kind = PhaseKind::Interferometric;
  std::string name;

  ComplexField clean() const;
};

/// Rescales `phase_source` to [0, pi/2] (interferometric) or [0, absolute_span]
/// (absolute), then derives the amplitude as the affine map of that phase with
/// minimum 0.5 and mean 1.0.
///
/// Throws std::invalid_argument for a constant source, or when absolute_span
/// is not positive for an absolute scene.
TestScene build_scene(const std::string& name, const RealField& phase_source, PhaseKind kind,
                      double absolute_span = 0.0);

/// Isotropic Gaussian bump exp(-(r/rho)^2), rho = 0.3 * size, clipped at 0.6.
RealField truncated_gauss_source(std::size_t size);

/// Sum of four fixed Gaussian bumps.
RealField hills_source(std::size_t size);

/// Built-in generator by name ("gauss" or "hills").
RealField builtin_source(const std::string& name, std::size_t size);

/// 16*pi for gauss, 20*pi for hills; throws for other names.
double default_absolute_span(const std::string& name);

std::string to_string(PhaseKind k);
PhaseKind parse_phase_kind(const std::string& s);

}  // namespace cdid
