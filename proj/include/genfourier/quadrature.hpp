#pragma once

#include <genfourier/errors.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace genfourier::quadrature {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  std::int64_t max_subdivisions = 1 << 16;
  int rule_order = 15;  // Gauss-Legendre points per panel

  void validate() const {
    if (!(abs_tol > 0)) throw ArgumentError("QuadratureConfig: abs_tol must be positive");
    if (rule_order < 2) throw ArgumentError("QuadratureConfig: rule_order must be >= 2");
  }
};

template <typename T>
struct QuadResult {
  T value{};
  double est_error = 0.0;
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
/// the Legendre polynomial.  Deterministic; no caching, so safe to call
/// concurrently.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Adaptive panel integration of fn over [a, b].  The panel set starts from
/// `splits` (interior subdivision points, e.g. breakpoints of the integrand)
/// refined to at least `min_panels` uniform sub-panels overall, then is
/// refined dyadically until two successive refinements differ by less than
/// abs_tol.  Throws AccuracyError if the panel count exceeds
/// max_subdivisions without convergence.
QuadResult<double> integrate(const std::function<double(double)>& fn, double a, double b,
                             const std::vector<double>& splits, const QuadratureConfig& cfg,
                             int min_panels = 1);

QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& fn, double a, double b,
    const std::vector<double>& splits, const QuadratureConfig& cfg, int min_panels = 1);

}  // namespace genfourier::quadrature
