#pragma once

#include <genfourier/funcmodel.hpp>
#include <genfourier/interval.hpp>
#include <genfourier/quadrature.hpp>
#include <genfourier/stieltjes.hpp>

#include <complex>
#include <vector>

namespace genfourier::fourier {

using Complex = std::complex<double>;
using funcmodel::PiecewiseFn;
using quadrature::QuadratureConfig;

/// Exponential Fourier coefficients c_n = (1/2delta) integral of
/// f(u) e^{-i pi n u / delta} over [c, d], for |n| <= N.
struct FourierCoeffs {
  Interval interval;
  int N = 0;
  std::vector<Complex> c;  // index n + N
  double max_est_error = 0.0;

  const Complex& coeff(int n) const {
    if (n < -N || n > N) throw ArgumentError("FourierCoeffs: order out of range");
    return c[static_cast<size_t>(n + N)];
  }
};

/// Trigonometric view: a_n = c_n + c_{-n}, b_n = i (c_n - c_{-n}); a[0] is
/// 2 c_0 so that the series reads a_0/2 + sum(a_n cos + b_n sin).
struct TrigCoeffs {
  std::vector<Complex> a;  // size N + 1
  std::vector<Complex> b;  // size N + 1, b[0] unused (zero)
};

/// One midpoint identity evaluation: lhs is the identity's left side, rhs
/// the assembled right side, with the three named contributions.
struct MidpointReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double mean_term = 0.0;
  double stieltjes_term = 0.0;
  double boundary_term = 0.0;
  double est_error = 0.0;
};

enum class Side { Left, Right, Both };
enum class SumMode { Direct, Cesaro };

/// Coefficients by per-piece oscillatory moments: closed forms for
/// polynomial and sinusoid pieces, adaptive quadrature otherwise.  Positive
/// and negative orders are computed independently (conjugate symmetry for
/// real-valued f is a checked property, not a construction).
FourierCoeffs exp_coeffs(const PiecewiseFn& f, const Interval& iv, int N,
                         const QuadratureConfig& cfg);

TrigCoeffs trig_coeffs(const FourierCoeffs& fc);

/// Partial sum over 1 <= |n| <= l at x, plus c_0 when include_mean is set.
Complex partial_sum(const FourierCoeffs& fc, double x, int l, bool include_mean);

/// Mean of the first N partial sums (the (c,1) value): the equivalent
/// weighted sum over 1 <= |n| <= N-1 with weights (N - |n|)/N, plus c_0 when
/// include_mean is set.
Complex cesaro_mean(const FourierCoeffs& fc, double x, int N, bool include_mean);

/// Left-limit identity on [c, d]:
///   f(a-)/2 = (1/2delta) int_c^a f du + int_c^a psi((u-a)/2delta) df
///           + f(c) (1/2 - (a-c)/2delta).
/// The Stieltjes term sees f restricted to [c, a] with the value at a set to
/// f(a-), which is how the window enters the underlying one-sided-limit
/// integral; in particular a jump of f at a contributes no atom.
MidpointReport theorem1_left(const PiecewiseFn& f, const Interval& iv, double a,
                             const QuadratureConfig& cfg);

/// Right-limit identity, the mirror of theorem1_left:
///   f(a+)/2 = (1/2delta) int_a^d f du - int_a^d psi((a-u)/2delta) df
///           + f(d) (1/2 - (d-a)/2delta).
MidpointReport theorem1_right(const PiecewiseFn& f, const Interval& iv, double a,
                              const QuadratureConfig& cfg);

/// Two-sided identity, requiring f(c) == f(d) on stored values:
///   (f(a+)+f(a-))/2 = (1/2delta) int_c^d f du + int_c^d psi((u-a)/2delta) df.
/// The Stieltjes term is evaluated as the sum of its [c,a] and [a,d] halves
/// with the one-sided window values at a, matching the left/right identities.
MidpointReport theorem1_both(const PiecewiseFn& f, const Interval& iv, double a,
                             const QuadratureConfig& cfg);

/// Local Fourier series at a over a one-sided window [a-delta, a] /
/// [a, a+delta] or the two-sided window [a-delta, a+delta], with
/// coefficients (1/2delta) integral of f(u) e^{-i pi n u/delta} over the
/// window.  Converges (in Cesaro mode) to f(a-), f(a+), or the midpoint.
Complex local_series(const PiecewiseFn& f, double a, double delta, Side side, int N, SumMode mode,
                     const QuadratureConfig& cfg);

/// Oscillatory moment of one piecewise function: integral of
/// f(u) e^{-i omega u} over [lo, hi].
Complex oscillatory_moment(const PiecewiseFn& f, double lo, double hi, double omega,
                           const QuadratureConfig& cfg, double* est_error = nullptr);

}  // namespace genfourier::fourier
