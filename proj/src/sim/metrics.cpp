#include "cdid/sim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cdid/sim/unwrap.hpp"
#include "cdid/sim/wrap.hpp"

namespace cdid {

namespace {

template <typename A, typename B>
void check_shapes(const A& a, const B& b, const char* what) {
  if (!a.same_shape(b) || a.empty()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

double ratio_db(double signal, double error) {
  if (error == 0.0) return kInfDb;
  return 10.0 * std::log10(signal / error);
}

double mean_of(const RealField& f) {
  double s = 0.0;
  for (double v : f.data()) s += v;
  return s / static_cast<double>(f.size());
}

double shift_compensation(const RealField& est, const RealField& truth) {
  return kTwoPi * std::trunc((mean_of(est) - mean_of(truth)) / kTwoPi);
}

}  // namespace

double psnr_phi(const RealField& est_phase, const RealField& true_phase) {
  check_shapes(est_phase, true_phase, "psnr_phi");
  double err = 0.0;
  for (std::size_t i = 0; i < est_phase.size(); ++i) {
    const double e = wrap(est_phase[i] - true_phase[i]);
    err += e * e;
  }
  return ratio_db(static_cast<double>(est_phase.size()) * kTwoPi * kTwoPi, err);
}

double psnr_ampl(const RealField& est_amplitude, const RealField& true_amplitude) {
  check_shapes(est_amplitude, true_amplitude, "psnr_ampl");
  const double peak = *std::max_element(true_amplitude.data().begin(), true_amplitude.data().end());
  if (!(peak > 0.0)) throw std::invalid_argument("psnr_ampl: true amplitude is all zero");
  double err = 0.0;
  for (std::size_t i = 0; i < est_amplitude.size(); ++i) {
    const double e = true_amplitude[i] - est_amplitude[i];
    err += e * e;
  }
  return ratio_db(static_cast<double>(est_amplitude.size()) * peak * peak, err);
}

AbsPhaseError rmse_abs_phase(const RealField& est_abs, const RealField& true_abs) {
  check_shapes(est_abs, true_abs, "rmse_abs_phase");
  AbsPhaseError out;
  out.delta_shift = shift_compensation(est_abs, true_abs);
  double err = 0.0;
  for (std::size_t i = 0; i < est_abs.size(); ++i) {
    const double e = true_abs[i] - est_abs[i] + out.delta_shift;
    err += e * e;
  }
  out.rmse = std::sqrt(err / static_cast<double>(est_abs.size()));
  return out;
}

double rmse_a(const RealField& est_amplitude, const RealField& true_amplitude) {
  check_shapes(est_amplitude, true_amplitude, "rmse_a");
  double err = 0.0;
  for (std::size_t i = 0; i < est_amplitude.size(); ++i) {
    const double e = est_amplitude[i] - true_amplitude[i];
    err += e * e;
  }
  return std::sqrt(err / static_cast<double>(est_amplitude.size()));
}

double snr_c(const ComplexField& est, const ComplexField& truth) {
  check_shapes(est, truth, "snr_c");
  cplx mean{};
  for (const auto& v : truth.data()) mean += v;
  mean /= static_cast<double>(truth.size());
  double signal = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    signal += std::norm(truth[i] - mean);
    err += std::norm(truth[i] - est[i]);
  }
  if (signal == 0.0) throw std::invalid_argument("snr_c: constant true field");
  return ratio_db(signal, err);
}

double snr_phi_abs(const RealField& est_abs, const RealField& true_abs) {
  check_shapes(est_abs, true_abs, "snr_phi_abs");
  const double shift = shift_compensation(est_abs, true_abs);
  const double mean = mean_of(true_abs);
  double signal = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < true_abs.size(); ++i) {
    signal += (true_abs[i] - mean) * (true_abs[i] - mean);
    const double e = true_abs[i] - est_abs[i] + shift;
    err += e * e;
  }
  if (signal == 0.0) throw std::invalid_argument("snr_phi_abs: constant true phase");
  return ratio_db(signal, err);
}

RealField phase_of(const ComplexField& f) {
  RealField out(f.height(), f.width());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] == cplx{} ? 0.0 : wrap(std::arg(f[i]));
  return out;
}

RealField amplitude_of(const ComplexField& f) {
  RealField out(f.height(), f.width());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

MetricReport evaluate_estimate(const ComplexField& est, const TestScene& scene) {
  const RealField est_phase = phase_of(est);
  const RealField est_ampl = amplitude_of(est);
  const RealField est_abs = unwrap_simple(est_phase);

  MetricReport r;
  r.psnr_phi = psnr_phi(est_phase, scene.phase);
  r.psnr_ampl = psnr_ampl(est_ampl, scene.amplitude);
  const auto abs_err = rmse_abs_phase(est_abs, scene.phase);
  r.rmse_phi_abs = abs_err.rmse;
  r.delta_phi_shift = abs_err.delta_shift;
  r.rmse_a = rmse_a(est_ampl, scene.amplitude);
  r.snr_c = snr_c(est, scene.clean());
  r.snr_phi_abs = snr_phi_abs(est_abs, scene.phase);
  return r;
}

}  // namespace cdid
