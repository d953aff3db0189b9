#include "homlsc/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace homlsc {

void QuadratureRule::validate() const {
  if (nodes_per_axis < 3)
    throw InvalidSpec("quadrature needs >= 3 nodes per axis");
  if (!(half_span > 0.0) || !std::isfinite(half_span))
    throw InvalidSpec("quadrature half_span must be positive");
}

namespace {

Quad1D compute_gauss_legendre(int n) {
  Quad1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration seeded by the Chebyshev estimate of the i-th root.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Roots come out in descending order; mirror so symmetry is bit-exact.
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    q.weights[i] = w;
    q.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) q.nodes[n / 2] = 0.0;
  return q;
}

std::mutex g_gl_mutex;
std::map<int, Quad1D> g_gl_cache;

}  // namespace

const Quad1D& gauss_legendre_reference(int n) {
  if (n < 1) throw InvalidSpec("gauss_legendre_reference needs n >= 1");
  std::lock_guard<std::mutex> lock(g_gl_mutex);
  auto it = g_gl_cache.find(n);
  if (it == g_gl_cache.end())
    it = g_gl_cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

Quad1D axis_rule(const QuadratureRule& rule, int nodes_override) {
  const int n = nodes_override > 0 ? nodes_override : rule.nodes_per_axis;
  const double h = rule.half_span;
  Quad1D out;
  if (rule.kind == QuadKind::gauss_legendre) {
    const Quad1D& ref = gauss_legendre_reference(n);
    out.nodes.resize(n);
    out.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      out.nodes[i] = h * ref.nodes[i];
      out.weights[i] = h * ref.weights[i];
    }
  } else {
    out.nodes.resize(n);
    out.weights.assign(n, 0.0);
    const double step = 2.0 * h / (n - 1);
    for (int i = 0; i < n / 2; ++i) {
      const double x = -h + i * step;
      out.nodes[i] = x;
      out.nodes[n - 1 - i] = -x;
    }
    if (n % 2 == 1) out.nodes[n / 2] = 0.0;
    for (int i = 0; i < n; ++i)
      out.weights[i] = (i == 0 || i == n - 1) ? 0.5 * step : step;
  }
  return out;
}

namespace {

template <class T>
T pairwise_impl(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_impl(v.first(half)) + pairwise_impl(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_impl(values);
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
  return pairwise_impl(values);
}

namespace detail {

std::string format_bad_node(double x, double y) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "integrand is not finite at node (omega_s=%.9g, omega_i=%.9g)",
                x, y);
  return buf;
}

void throw_non_convergence(std::complex<double> previous,
                           std::complex<double> last, int nodes) {
  char buf[240];
  std::snprintf(buf, sizeof(buf),
                "quadrature not converged at %d nodes/axis; last estimates "
                "(%.12g%+.12gi) and (%.12g%+.12gi)",
                nodes, previous.real(), previous.imag(), last.real(),
                last.imag());
  throw NonConvergenceError(buf, previous, last, nodes);
}

}  // namespace detail

}  // namespace homlsc
