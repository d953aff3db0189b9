#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "homlsc/physics.hpp"
#include "homlsc/quadrature.hpp"

namespace homlsc {

// Path-delay convention for the interferometer exponential
// exp(-i kappa (omega_s - omega_i) dl / c): kappa = 2 keeps the factor 2
// printed for the double-pass geometry, kappa = 1 models a single pass.
enum class DelayConvention { single_pass, double_pass };

struct ExperimentConfig {
  PumpSpec pump;
  CrystalSpec crystal;
  FilterSpec filter;
  QuadratureRule rule;
  DelayConvention delay_convention = DelayConvention::double_pass;
  double quad_rel_tol = 1e-9;
  int quad_max_nodes = 4096;

  double delay_factor() const;  // kappa
  void validate() const;
};

// Detuning half-span that covers the filter passband: the filter's offset
// from the degenerate frequency plus 5 amplitude sigmas (Gaussian) or the
// band half-width (rectangular). span_sigma overrides the factor 5.
double default_half_span(const PumpSpec& pump, const FilterSpec& filter,
                         double span_sigma = 5.0);

ExperimentConfig make_experiment(const PumpSpec& pump,
                                 const CrystalSpec& crystal,
                                 const FilterSpec& filter,
                                 DelayConvention convention = DelayConvention::double_pass,
                                 int nodes_per_axis = 32,
                                 double span_sigma = 5.0);

struct ScanMeta {
  ExperimentConfig config;
  double baseline = 0.0;  // normalization constant: half the baseline integral
};

struct ScanResult {
  std::vector<double> abscissa;  // dl [m], strictly increasing
  std::vector<double> values;    // normalized g2
  ScanMeta meta;

  void validate() const;
};

struct SweepResult {
  std::vector<double> theta;        // [rad]
  std::vector<double> dl;           // [m]
  std::vector<std::vector<double>> g2;  // g2[i][j] at (theta[i], dl[j])
};

// Evaluates normalized coincidences for one configuration. The baseline
// double integral is converged once at construction; per-delay integrals
// reuse cached node tables, so scans over many dl values stay cheap.
class CoincidenceEvaluator {
public:
  explicit CoincidenceEvaluator(const ExperimentConfig& config);

  // Normalized g2(dl): 1 at large |dl|, 0 at a perfect dip.
  double operator()(double dl) const;

  double normalization() const { return baseline_; }
  int baseline_nodes() const { return baseline_nodes_; }

private:
  struct NodeData {
    Quad1D axis;
    std::vector<double> amp2;    // per-node squared filter amplitude
    std::vector<double> weight;  // flattened W matrix (non-separable only)
    bool separable = false;
    double base_integral = 0.0;  // double integral of W at this node count
  };

  const NodeData& node_data(int n) const;
  std::complex<double> delay_integral(const NodeData& nd, double dl) const;

  ExperimentConfig cfg_;
  double kappa_ = 2.0;
  double base_ = 0.0;      // converged baseline double integral
  double baseline_ = 0.0;  // normalization constant 0.5 * base_
  int baseline_nodes_ = 0;
  mutable std::mutex mutex_;
  mutable std::map<int, NodeData> cache_;
};

// Single normalized coincidence value (convenience wrapper; scans should use
// hom_scan so the baseline is converged only once).
double coincidence(const ExperimentConfig& config, double dl);

// Normalized dip scan over a strictly increasing dl grid. Grid points are
// independent and may be computed in parallel; the result is identical for
// any worker count.
ScanResult hom_scan(const ExperimentConfig& config,
                    const std::vector<double>& dl_grid);

// One hom_scan per pump angle; row i holds the scan at theta_grid[i].
SweepResult surface_sweep(const ExperimentConfig& config,
                          const std::vector<double>& dl_grid,
                          const std::vector<double>& theta_grid);

// Classical Michelson fringe visibility of the pump, |gamma(dz)|.
std::vector<double> michelson_visibility(const PumpSpec& pump,
                                         const std::vector<double>& delta_z_grid);

}  // namespace homlsc
