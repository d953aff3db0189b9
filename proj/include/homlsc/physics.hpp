#pragma once

#include <complex>
#include <vector>

#include "homlsc/errors.hpp"

namespace homlsc {

inline constexpr double speed_of_light = 299792458.0;  // [m/s]
inline constexpr double pi = 3.14159265358979323846;

// sin(x)/x with the removable singularity filled in.
double sinc(double x);

enum class FilterShape { gaussian, rectangular };

// Pump beam parameters. angular_width is the full width of the pump cone;
// the axial wavevector quantities below use the half angle.
struct PumpSpec {
  double wavelength = 405e-9;        // lambda_p [m]
  double angular_width = 0.06;       // theta_p [rad]
  double temporal_coherence = 1e-3;  // l_c [m]
  double michelson_shift = 0.0;      // delta z_p [m]
  bool temporal_envelope = true;     // apply the Gaussian l_c envelope

  double carrier_frequency() const;  // omega_p = 2 pi c / lambda_p [rad/s]
  double axial_carrier() const;      // k_p0z = (omega_p/c) cos^2(theta_p/2) [rad/m]
  double axial_spread() const;       // dk_pz = 2 (omega_p/c) sin^2(theta_p/2) [rad/m]
  void validate() const;
};

// Nonlinear crystal with a configurable quadratic phase-mismatch model:
//   dk = beta1 (W_s - W_i) + beta2 (W_s - W_i)^2 / 2
// Both coefficients zero means perfect phase matching.
struct CrystalSpec {
  double length = 5e-3;              // L [m]
  double gvd_coefficient = 0.0;      // beta2 [s^2/m]
  double group_delay_mismatch = 0.0; // beta1 [s/m]

  void validate() const;
};

// Detection filter common to the signal and idler arms. bandwidth_fwhm is
// the FWHM of the *intensity* transmission expressed as a wavelength width.
struct FilterSpec {
  double center_wavelength = 810e-9;  // [m]
  double bandwidth_fwhm = 10e-9;      // [m]
  FilterShape shape = FilterShape::gaussian;

  double center_frequency() const;        // omega_0 [rad/s]
  double bandwidth_fwhm_frequency() const;// intensity FWHM in omega [rad/s]
  double amplitude_sigma() const;         // sigma of the amplitude Gaussian
  double coherence_length() const;        // lambda^2 / d lambda [m]
  void validate() const;
};

// Symmetric detuning grid about the degenerate frequency omega_p/2.
struct DetuningGrid {
  double half_span = 0.0;      // [rad/s]
  int node_count = 0;
  std::vector<double> nodes;   // ascending, exactly mirror-symmetric

  static DetuningGrid uniform(double half_span, int node_count);
  static DetuningGrid midpoint(double half_span, int node_count);
  void validate() const;
};

// Longitudinal spatial coherence length rho_parallel of the pump.
// exact: lambda_p / (2 sin^2(theta_p/2)); small angle: 2 lambda_p / theta_p^2.
// The exact form is always >= the small-angle form. Throws for theta_p = 0
// (plane-wave pump, infinite coherence length).
double lsc_length(const PumpSpec& pump, bool small_angle);

// Normalized pump autocorrelation gamma(dz) = Gamma_p(dz) / Gamma_p(0):
//   sinc(dk_pz dz / 2) * exp(i k_p0z dz)
// optionally multiplied by the temporal-coherence magnitude envelope
// exp(-pi (dz/l_c)^2 / 2). gamma(0) = 1 and |gamma| <= 1 everywhere.
std::complex<double> pump_coherence_kernel(const PumpSpec& pump, double delta_z);

// sinc(dk L / 2) with dk from the crystal's quadratic mismatch model.
double phase_matching_amplitude(const CrystalSpec& crystal,
                                double omega_s_detuning,
                                double omega_i_detuning);

// Amplitude transmission at absolute angular frequency omega, in [0, 1].
double filter_amplitude(const FilterSpec& filter, double omega);

// The dl-independent part of the Eq.-style coincidence integrand:
// |f(omega_s) f(omega_i)|^2 * phi^2 evaluated at detunings about omega_p/2.
double joint_spectral_weight(const PumpSpec& pump, const CrystalSpec& crystal,
                             const FilterSpec& filter, double omega_s_detuning,
                             double omega_i_detuning);

}  // namespace homlsc
