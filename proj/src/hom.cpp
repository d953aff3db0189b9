#include "homlsc/hom.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "homlsc/parallel.hpp"

namespace homlsc {

double ExperimentConfig::delay_factor() const {
  return delay_convention == DelayConvention::double_pass ? 2.0 : 1.0;
}

void ExperimentConfig::validate() const {
  pump.validate();
  crystal.validate();
  filter.validate();
  rule.validate();
  if (!(quad_rel_tol > 0.0) || !(quad_rel_tol < 1.0))
    throw InvalidSpec("quad_rel_tol must lie in (0, 1)");
  if (quad_max_nodes < rule.nodes_per_axis)
    throw InvalidSpec("quad_max_nodes must be >= the rule's nodes_per_axis");
}

double default_half_span(const PumpSpec& pump, const FilterSpec& filter,
                         double span_sigma) {
  const double offset =
      std::abs(filter.center_frequency() - 0.5 * pump.carrier_frequency());
  if (filter.shape == FilterShape::rectangular)
    return offset + 0.5 * filter.bandwidth_fwhm_frequency();
  return offset + span_sigma * filter.amplitude_sigma();
}

ExperimentConfig make_experiment(const PumpSpec& pump,
                                 const CrystalSpec& crystal,
                                 const FilterSpec& filter,
                                 DelayConvention convention,
                                 int nodes_per_axis, double span_sigma) {
  ExperimentConfig cfg;
  cfg.pump = pump;
  cfg.crystal = crystal;
  cfg.filter = filter;
  cfg.rule.kind = QuadKind::gauss_legendre;
  cfg.rule.nodes_per_axis = nodes_per_axis;
  cfg.rule.half_span = default_half_span(pump, filter, span_sigma);
  cfg.delay_convention = convention;
  cfg.validate();
  return cfg;
}

void ScanResult::validate() const {
  if (abscissa.size() != values.size())
    throw InvalidSpec("scan abscissa and values differ in length");
  for (std::size_t i = 0; i + 1 < abscissa.size(); ++i)
    if (!(abscissa[i] < abscissa[i + 1]))
      throw InvalidSpec("scan abscissa must be strictly increasing");
  for (double v : values)
    if (!(v >= -1e-9) || !(v <= 1.0 + 1e-9))
      throw InvalidSpec("scan values must lie in [0, 1] within 1e-9");
}

CoincidenceEvaluator::CoincidenceEvaluator(const ExperimentConfig& config)
    : cfg_(config) {
  cfg_.validate();
  kappa_ = cfg_.delay_factor();
  ConvergeOptions opt;
  opt.rel_tol = cfg_.quad_rel_tol;
  opt.max_nodes_per_axis = cfg_.quad_max_nodes;
  const Converged base = converge_nodes(
      cfg_.rule.nodes_per_axis, opt,
      [this](int n) -> std::complex<double> { return node_data(n).base_integral; });
  base_ = base.value.real();
  baseline_nodes_ = base.nodes_used;
  baseline_ = 0.5 * base_;
  if (!(base_ > 0.0))
    throw InvalidSpec("baseline spectral integral vanishes; the filter "
                      "passband misses the integration window");
}

const CoincidenceEvaluator::NodeData& CoincidenceEvaluator::node_data(
    int n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  NodeData nd;
  nd.axis = axis_rule(cfg_.rule, n);
  nd.separable = cfg_.crystal.group_delay_mismatch == 0.0 &&
                 cfg_.crystal.gvd_coefficient == 0.0;
  const double degenerate = 0.5 * cfg_.pump.carrier_frequency();
  nd.amp2.resize(n);
  for (int i = 0; i < n; ++i) {
    const double a = filter_amplitude(cfg_.filter, degenerate + nd.axis.nodes[i]);
    nd.amp2[i] = a * a;
  }
  if (nd.separable) {
    std::vector<double> terms(n);
    for (int i = 0; i < n; ++i) terms[i] = nd.axis.weights[i] * nd.amp2[i];
    const double s = pairwise_sum(std::span<const double>(terms));
    nd.base_integral = s * s;
  } else {
    nd.weight.resize(static_cast<std::size_t>(n) * n);
    std::vector<double> row(n), rows(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double phi = phase_matching_amplitude(
            cfg_.crystal, nd.axis.nodes[i], nd.axis.nodes[j]);
        const double w = nd.amp2[i] * nd.amp2[j] * phi * phi;
        nd.weight[static_cast<std::size_t>(i) * n + j] = w;
        row[j] = nd.axis.weights[j] * w;
      }
      rows[i] = nd.axis.weights[i] * pairwise_sum(std::span<const double>(row));
    }
    nd.base_integral = pairwise_sum(std::span<const double>(rows));
  }
  return cache_.emplace(n, std::move(nd)).first->second;
}

std::complex<double> CoincidenceEvaluator::delay_integral(const NodeData& nd,
                                                          double dl) const {
  const int n = static_cast<int>(nd.axis.nodes.size());
  const double rate = -kappa_ * dl / speed_of_light;
  std::vector<std::complex<double>> phase(n);
  for (int i = 0; i < n; ++i) {
    const double arg = rate * nd.axis.nodes[i];
    phase[i] = {std::cos(arg), std::sin(arg)};
  }
  if (nd.separable) {
    std::vector<std::complex<double>> terms(n);
    for (int i = 0; i < n; ++i)
      terms[i] = nd.axis.weights[i] * nd.amp2[i] * phase[i];
    const std::complex<double> s =
        pairwise_sum(std::span<const std::complex<double>>(terms));
    return s * std::conj(s);
  }
  std::vector<std::complex<double>> row(n), rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      row[j] = nd.axis.weights[j] *
               nd.weight[static_cast<std::size_t>(i) * n + j] *
               std::conj(phase[j]);
    rows[i] = nd.axis.weights[i] * phase[i] *
              pairwise_sum(std::span<const std::complex<double>>(row));
  }
  return pairwise_sum(std::span<const std::complex<double>>(rows));
}

double CoincidenceEvaluator::operator()(double dl) const {
  PumpSpec shifted = cfg_.pump;
  const double envelope = std::abs(
      pump_coherence_kernel(shifted, cfg_.pump.michelson_shift + dl));

  ConvergeOptions opt;
  opt.rel_tol = cfg_.quad_rel_tol;
  opt.max_nodes_per_axis = cfg_.quad_max_nodes;
  opt.scale = base_;  // converge the delay integral on the baseline's scale
  const Converged dip = converge_nodes(
      cfg_.rule.nodes_per_axis, opt,
      [this, dl](int n) { return delay_integral(node_data(n), dl); });

  return 1.0 - envelope * dip.value.real() / base_;
}

double coincidence(const ExperimentConfig& config, double dl) {
  return CoincidenceEvaluator(config)(dl);
}

ScanResult hom_scan(const ExperimentConfig& config,
                    const std::vector<double>& dl_grid) {
  for (std::size_t i = 0; i + 1 < dl_grid.size(); ++i)
    if (!(dl_grid[i] < dl_grid[i + 1]))
      throw InvalidSpec("dl grid must be strictly increasing");

  const CoincidenceEvaluator eval(config);
  ScanResult scan;
  scan.abscissa = dl_grid;
  scan.values.resize(dl_grid.size());
  scan.meta.config = config;
  scan.meta.baseline = eval.normalization();

  parallel_for(dl_grid.size(), [&](std::size_t i) {
    try {
      scan.values[i] = eval(dl_grid[i]);
    } catch (const NonConvergenceError& e) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), " (at dl = %.9g m)", dl_grid[i]);
      throw NonConvergenceError(e.what() + std::string(buf),
                                e.previous_estimate, e.last_estimate,
                                e.nodes_per_axis);
    }
  });
  return scan;
}

SweepResult surface_sweep(const ExperimentConfig& config,
                          const std::vector<double>& dl_grid,
                          const std::vector<double>& theta_grid) {
  for (std::size_t i = 0; i + 1 < theta_grid.size(); ++i)
    if (!(theta_grid[i] < theta_grid[i + 1]))
      throw InvalidSpec("theta grid must be strictly increasing");

  SweepResult sweep;
  sweep.theta = theta_grid;
  sweep.dl = dl_grid;
  sweep.g2.resize(theta_grid.size());
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    ExperimentConfig cfg = config;
    cfg.pump.angular_width = theta_grid[i];
    try {
      sweep.g2[i] = hom_scan(cfg, dl_grid).values;
    } catch (const Error& e) {
      char buf[120];
      std::snprintf(buf, sizeof(buf), " (at theta_p = %.9g rad)", theta_grid[i]);
      throw Error(e.what() + std::string(buf));
    }
  }
  return sweep;
}

std::vector<double> michelson_visibility(const PumpSpec& pump,
                                         const std::vector<double>& delta_z_grid) {
  pump.validate();
  std::vector<double> vis(delta_z_grid.size());
  for (std::size_t i = 0; i < delta_z_grid.size(); ++i)
    vis[i] = std::abs(pump_coherence_kernel(pump, delta_z_grid[i]));
  return vis;
}

}  // namespace homlsc
