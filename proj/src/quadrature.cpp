#include <genfourier/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace genfourier::quadrature {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double pi = std::numbers::pi;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess for the i-th positive root.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P'_n(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

namespace {

template <typename T>
T panels_sum(const std::function<T(double)>& fn, const std::vector<double>& edges, int refine,
             const std::vector<double>& xs, const std::vector<double>& ws) {
  T total{};
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    double lo = edges[p], hi = edges[p + 1];
    double h = (hi - lo) / refine;
    for (int s = 0; s < refine; ++s) {
      double a = lo + s * h, b = (s + 1 == refine) ? hi : lo + (s + 1) * h;
      double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      T acc{};
      for (size_t i = 0; i < xs.size(); ++i) acc += ws[i] * fn(mid + half * xs[i]);
      total += half * acc;
    }
  }
  return total;
}

template <typename T>
QuadResult<T> integrate_impl(const std::function<T(double)>& fn, double a, double b,
                             const std::vector<double>& splits, const QuadratureConfig& cfg,
                             int min_panels) {
  cfg.validate();
  if (!(a < b)) {
    if (a == b) return {};
    throw ArgumentError("integrate: requires a <= b");
  }

  std::vector<double> edges{a};
  for (double s : splits)
    if (s > a && s < b) edges.push_back(s);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  int refine = 1;
  while (static_cast<int>(edges.size() - 1) * refine < min_panels) refine *= 2;

  std::vector<double> xs, ws;
  gauss_legendre(cfg.rule_order, xs, ws);

  T prev = panels_sum(fn, edges, refine, xs, ws);
  for (;;) {
    refine *= 2;
    std::int64_t count = static_cast<std::int64_t>(edges.size() - 1) * refine;
    T cur = panels_sum(fn, edges, refine, xs, ws);
    double diff = std::abs(cur - prev);
    if (diff < cfg.abs_tol) return {cur, diff};
    if (count > cfg.max_subdivisions)
      throw AccuracyError("quadrature did not converge (estimated error " + std::to_string(diff) +
                              ")",
                          diff);
    prev = cur;
  }
}

}  // namespace

QuadResult<double> integrate(const std::function<double(double)>& fn, double a, double b,
                             const std::vector<double>& splits, const QuadratureConfig& cfg,
                             int min_panels) {
  return integrate_impl<double>(fn, a, b, splits, cfg, min_panels);
}

QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& fn, double a, double b,
    const std::vector<double>& splits, const QuadratureConfig& cfg, int min_panels) {
  return integrate_impl<std::complex<double>>(fn, a, b, splits, cfg, min_panels);
}

}  // namespace genfourier::quadrature
