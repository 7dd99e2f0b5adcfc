#pragma once

#include <genfourier/funcmodel.hpp>
#include <genfourier/quadrature.hpp>

#include <complex>
#include <vector>

namespace genfourier::finiteseries {

using Complex = std::complex<double>;
using funcmodel::PiecewiseFn;
using quadrature::QuadratureConfig;

/// Finite Fourier series modulo q of a function on the unit interval:
/// f(a/q) = b_0 + sum_{r=1..q-1} b_r e^{2 pi i r a / q}.
struct FiniteFourier {
  int q = 1;
  std::vector<Complex> b;           // size q, b[0] the mean-plus-sawtooth term
  std::vector<double> grid_values;  // size q + 1: f(l/q) for l = 0..q
};

/// Coefficients per the step-kernel Stieltjes integrals:
///   b_r = integral of psi(u, q - r, q) df      (r = 1..q-1)
///   b_0 = integral of f + integral of psi(u, q, q) df.
/// The step-kernel integrals are evaluated exactly as grid-increment sums
/// sum_l s_l (f(l/q) - f((l-1)/q)) -- constant integrand per cell, so jumps
/// of f strictly inside a cell are picked up by the increments.  b_0's
/// sawtooth term goes through quadrature with panels split at grid points.
///
/// Requires: f on [0,1], f(0) == f(1), f continuous at l/q for l = 1..q,
/// f good.
FiniteFourier finite_coeffs(const PiecewiseFn& f, int q, const QuadratureConfig& cfg);

/// Evaluates the finite series at a/q for an integer 1 <= a <= q (the r = q
/// term carries exponential factor 1, so it reads as b_0).
Complex reconstruct(const FiniteFourier& ff, int a);

struct IndependenceReport {
  bool pass = false;
  double max_residual = 0.0;
};

/// Checks that one coefficient vector reconstructs f(a/q) for every
/// a = 1..q.
IndependenceReport coefficient_independence_check(const PiecewiseFn& f, int q,
                                                  const QuadratureConfig& cfg,
                                                  double tol = 1e-10);

/// Independent route for b_r (r = 1..q-1): dense quadrature of the real and
/// imaginary parts of the step kernel against df.  Used as the cross-check
/// oracle for the grid-increment evaluation.
Complex finite_coeff_quadrature(const PiecewiseFn& f, int r, int q, const QuadratureConfig& cfg);

}  // namespace genfourier::finiteseries
