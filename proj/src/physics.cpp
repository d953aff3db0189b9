#include "homlsc/physics.hpp"

#include <cmath>
#include <string>

namespace homlsc {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double PumpSpec::carrier_frequency() const {
  return 2.0 * pi * speed_of_light / wavelength;
}

double PumpSpec::axial_carrier() const {
  const double c = std::cos(0.5 * angular_width);
  return 2.0 * pi / wavelength * c * c;
}

double PumpSpec::axial_spread() const {
  const double s = std::sin(0.5 * angular_width);
  return 4.0 * pi / wavelength * s * s;
}

void PumpSpec::validate() const {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength))
    throw InvalidSpec("pump wavelength must be positive");
  if (!(angular_width > 0.0) || !(angular_width < 0.5 * pi))
    throw InvalidSpec("pump angular width must lie in (0, pi/2)");
  if (!(temporal_coherence > 0.0) || !std::isfinite(temporal_coherence))
    throw InvalidSpec("pump temporal coherence length must be positive");
  if (!(michelson_shift >= 0.0) || !std::isfinite(michelson_shift))
    throw InvalidSpec("pump Michelson shift must be >= 0");
  if (!std::isfinite(carrier_frequency()) || !(carrier_frequency() > 0.0))
    throw InvalidSpec("pump carrier frequency is not finite");
}

void CrystalSpec::validate() const {
  if (!(length > 0.0) || !std::isfinite(length))
    throw InvalidSpec("crystal length must be positive");
  if (!std::isfinite(gvd_coefficient) || !std::isfinite(group_delay_mismatch))
    throw InvalidSpec("crystal dispersion coefficients must be finite");
}

double FilterSpec::center_frequency() const {
  return 2.0 * pi * speed_of_light / center_wavelength;
}

double FilterSpec::bandwidth_fwhm_frequency() const {
  return 2.0 * pi * speed_of_light * bandwidth_fwhm /
         (center_wavelength * center_wavelength);
}

double FilterSpec::amplitude_sigma() const {
  // Intensity FWHM of exp(-w^2/(2 sigma^2)) is 2 sqrt(2 ln 2) sigma.
  return bandwidth_fwhm_frequency() / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

double FilterSpec::coherence_length() const {
  return center_wavelength * center_wavelength / bandwidth_fwhm;
}

void FilterSpec::validate() const {
  if (!(center_wavelength > 0.0) || !std::isfinite(center_wavelength))
    throw InvalidSpec("filter center wavelength must be positive");
  if (!(bandwidth_fwhm > 0.0) || !std::isfinite(bandwidth_fwhm))
    throw InvalidSpec("filter bandwidth must be positive");
}

DetuningGrid DetuningGrid::uniform(double half_span, int node_count) {
  DetuningGrid g;
  g.half_span = half_span;
  g.node_count = node_count;
  g.nodes.resize(node_count);
  // Mirror the lower half so symmetry holds exactly in floating point.
  const double step = 2.0 * half_span / (node_count - 1);
  for (int i = 0; i < node_count / 2; ++i) {
    const double x = -half_span + i * step;
    g.nodes[i] = x;
    g.nodes[node_count - 1 - i] = -x;
  }
  if (node_count % 2 == 1) g.nodes[node_count / 2] = 0.0;
  g.validate();
  return g;
}

DetuningGrid DetuningGrid::midpoint(double half_span, int node_count) {
  DetuningGrid g;
  g.half_span = half_span;
  g.node_count = node_count;
  g.nodes.resize(node_count);
  const double cell = 2.0 * half_span / node_count;
  for (int i = 0; i < node_count / 2; ++i) {
    const double x = -half_span + (i + 0.5) * cell;
    g.nodes[i] = x;
    g.nodes[node_count - 1 - i] = -x;
  }
  if (node_count % 2 == 1) g.nodes[node_count / 2] = 0.0;
  g.validate();
  return g;
}

void DetuningGrid::validate() const {
  if (!(half_span > 0.0)) throw InvalidSpec("detuning half_span must be > 0");
  if (node_count < 3) throw InvalidSpec("detuning grid needs >= 3 nodes");
  if (static_cast<int>(nodes.size()) != node_count)
    throw InvalidSpec("detuning node list does not match node_count");
  for (int i = 0; i + 1 < node_count; ++i)
    if (!(nodes[i] < nodes[i + 1]))
      throw InvalidSpec("detuning nodes must be strictly increasing");
  for (int i = 0; i < node_count / 2; ++i)
    if (nodes[i] != -nodes[node_count - 1 - i])
      throw InvalidSpec("detuning nodes must be symmetric about 0");
}

double lsc_length(const PumpSpec& pump, bool small_angle) {
  pump.validate();
  if (small_angle)
    return 2.0 * pump.wavelength / (pump.angular_width * pump.angular_width);
  const double s = std::sin(0.5 * pump.angular_width);
  return pump.wavelength / (2.0 * s * s);
}

std::complex<double> pump_coherence_kernel(const PumpSpec& pump,
                                           double delta_z) {
  pump.validate();
  double mag = sinc(0.5 * pump.axial_spread() * delta_z);
  if (pump.temporal_envelope) {
    const double u = delta_z / pump.temporal_coherence;
    mag *= std::exp(-0.5 * pi * u * u);
  }
  const double phase = pump.axial_carrier() * delta_z;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

double phase_matching_amplitude(const CrystalSpec& crystal,
                                double omega_s_detuning,
                                double omega_i_detuning) {
  crystal.validate();
  const double d = omega_s_detuning - omega_i_detuning;
  const double dk =
      crystal.group_delay_mismatch * d + 0.5 * crystal.gvd_coefficient * d * d;
  return sinc(0.5 * dk * crystal.length);
}

double filter_amplitude(const FilterSpec& filter, double omega) {
  filter.validate();
  if (!(omega > 0.0))
    throw InvalidSpec("filter_amplitude requires omega > 0");
  const double d = omega - filter.center_frequency();
  if (filter.shape == FilterShape::rectangular)
    return std::abs(d) <= 0.5 * filter.bandwidth_fwhm_frequency() ? 1.0 : 0.0;
  const double sigma = filter.amplitude_sigma();
  return std::exp(-d * d / (4.0 * sigma * sigma));
}

double joint_spectral_weight(const PumpSpec& pump, const CrystalSpec& crystal,
                             const FilterSpec& filter, double omega_s_detuning,
                             double omega_i_detuning) {
  const double degenerate = 0.5 * pump.carrier_frequency();
  const double fs = filter_amplitude(filter, degenerate + omega_s_detuning);
  const double fi = filter_amplitude(filter, degenerate + omega_i_detuning);
  const double phi =
      phase_matching_amplitude(crystal, omega_s_detuning, omega_i_detuning);
  return fs * fs * fi * fi * phi * phi;
}

}  // namespace homlsc
