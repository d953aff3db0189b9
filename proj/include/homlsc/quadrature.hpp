#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "homlsc/errors.hpp"

namespace homlsc {

enum class QuadKind { gauss_legendre, trapezoid };

// Tensor-product rule over the square [-half_span, +half_span]^2.
struct QuadratureRule {
  QuadKind kind = QuadKind::gauss_legendre;
  int nodes_per_axis = 32;
  double half_span = 1.0;  // [rad/s]

  void validate() const;
};

// One axis worth of nodes and weights, already mapped to [-H, H].
struct Quad1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes/weights on [-1, 1], cached per node count.
// Thread safe.
const Quad1D& gauss_legendre_reference(int n);

// Nodes/weights for one axis of the rule, optionally at an overridden
// node count (used by the doubling driver).
Quad1D axis_rule(const QuadratureRule& rule, int nodes_override = 0);

// Fixed-tree pairwise reduction; the result does not depend on how callers
// chunk work across threads.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

namespace detail {

std::string format_bad_node(double x, double y);

}  // namespace detail

// Tensor-product approximation of the double integral of f over the rule's
// square. f is called as f(omega_s_detuning, omega_i_detuning) and may
// return double or std::complex<double>. A non-finite integrand value
// aborts with the offending node in the message.
template <class F>
std::complex<double> integrate_2d(const QuadratureRule& rule, F&& f) {
  rule.validate();
  const Quad1D ax = axis_rule(rule);
  const int n = static_cast<int>(ax.nodes.size());
  std::vector<std::complex<double>> row(n), rows(n);
  for (int i = 0; i < n; ++i) {
    const double xs = ax.nodes[i];
    for (int j = 0; j < n; ++j) {
      const std::complex<double> v = f(xs, ax.nodes[j]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw QuadratureError(detail::format_bad_node(xs, ax.nodes[j]));
      row[j] = ax.weights[j] * v;
    }
    rows[i] = ax.weights[i] * pairwise_sum(std::span<const std::complex<double>>(row));
  }
  return pairwise_sum(std::span<const std::complex<double>>(rows));
}

struct Converged {
  std::complex<double> value;
  int nodes_used = 0;
};

struct ConvergeOptions {
  double rel_tol = 1e-9;
  int max_nodes_per_axis = 4096;
  double abs_tol = 1e-15;  // accept when the estimates differ by less than
                           // this absolutely (underflowing values)
  double scale = 0.0;      // optional magnitude floor for the relative test
};

namespace detail {

[[noreturn]] void throw_non_convergence(std::complex<double> previous,
                                        std::complex<double> last, int nodes);

}  // namespace detail

// Doubles the per-axis node count until two successive estimates agree.
// value_at(n) must evaluate the integral with n nodes per axis.
template <class Eval>
Converged converge_nodes(int start_nodes, const ConvergeOptions& opt,
                         Eval&& value_at) {
  if (!(opt.rel_tol > 0.0) || !(opt.rel_tol < 1.0))
    throw InvalidSpec("converge rel_tol must lie in (0, 1)");
  int n = start_nodes < 3 ? 3 : start_nodes;
  std::complex<double> prev = value_at(n);
  while (2 * n <= opt.max_nodes_per_axis) {
    n *= 2;
    const std::complex<double> cur = value_at(n);
    const double diff = std::abs(cur - prev);
    const double floor_mag = std::max(std::abs(cur), opt.scale);
    if (diff <= opt.rel_tol * floor_mag || diff <= opt.abs_tol)
      return {cur, n};
    if (2 * n > opt.max_nodes_per_axis)
      detail::throw_non_convergence(prev, cur, n);
    prev = cur;
  }
  // The cap did not even allow one doubling.
  detail::throw_non_convergence(prev, prev, n);
}

// Spec-level convergence driver over integrate_2d.
template <class F>
Converged converge(const QuadratureRule& rule, F&& f, double rel_tol,
                   int max_nodes_per_axis = 4096) {
  rule.validate();
  ConvergeOptions opt;
  opt.rel_tol = rel_tol;
  opt.max_nodes_per_axis = max_nodes_per_axis;
  return converge_nodes(rule.nodes_per_axis, opt, [&](int n) {
    QuadratureRule r = rule;
    r.nodes_per_axis = n;
    return integrate_2d(r, f);
  });
}

}  // namespace homlsc
