#pragma once

#include <limits>

#include "cdid/field.hpp"
#include "cdid/sim/scenes.hpp"

namespace cdid {

inline constexpr double kInfDb = std::numeric_limits<double>::infinity();

/// 10 log10(n (2 pi)^2 / ||W(est - truth)||^2); +inf for zero error.
double psnr_phi(const RealField& est_phase, const RealField& true_phase);

/// 10 log10(n max(a)^2 / ||a - est||^2); +inf for zero error.
double psnr_ampl(const RealField& est_amplitude, const RealField& true_amplitude);

struct AbsPhaseError {
  double rmse = 0.0;
  double delta_shift = 0.0;  // 2 pi * trunc((mean(est) - mean(truth)) / 2 pi)
};

/// RMSE of (truth - est + delta_shift).
AbsPhaseError rmse_abs_phase(const RealField& est_abs, const RealField& true_abs);

/// sqrt(mean((est - truth)^2)).
double rmse_a(const RealField& est_amplitude, const RealField& true_amplitude);

/// 10 log10(||u - mean(u)||^2 / ||u - est||^2). Throws for a constant truth.
double snr_c(const ComplexField& est, const ComplexField& truth);

/// Same ratio on absolute phases with the 2 pi shift compensated.
double snr_phi_abs(const RealField& est_abs, const RealField& true_abs);

struct MetricReport {
  double psnr_phi = 0.0;
  double psnr_ampl = 0.0;
  double rmse_phi_abs = 0.0;
  double rmse_a = 0.0;
  double snr_c = 0.0;
  double snr_phi_abs = 0.0;
  double delta_phi_shift = 0.0;
};

/// All criteria for a complex estimate of `scene`: phase = arg(est),
/// amplitude = |est|, absolute phase = unwrap_simple(arg(est)).
MetricReport evaluate_estimate(const ComplexField& est, const TestScene& scene);

RealField phase_of(const ComplexField& f);
RealField amplitude_of(const ComplexField& f);

}  // namespace cdid
