#pragma once

#include <genfourier/funcmodel.hpp>

#include <complex>
#include <cstdint>
#include <vector>

namespace genfourier::kernels {

using Complex = std::complex<double>;

/// Sawtooth kernel psi(u) = u - floor(u) - 1/2 (value -1/2 at integers).
double psi(double u);

/// Truncated sine expansion of psi: sum_{n=1..l} sin(2 pi n u) / (-pi n).
double psi_partial(double u, std::int64_t l);

/// Mean of the first N truncated sums, (1/N) sum_{l=1..N} psi_partial(u, l).
/// Evaluated as the equivalent weighted single sum, O(N).
double psi_cesaro(double u, std::int64_t N);

/// Constant term c(r,q) of the arithmetic-progression kernel, 1 <= r < q.
/// Purely imaginary; evaluated via the cotangent form i/(2q) * cot(pi r/q).
Complex c_rq(int r, int q);

/// Direct series for c(r,q): -(1/(2 pi i)) (1/r - 2r sum_{m<=terms} 1/(m^2 q^2 - r^2)).
/// Slowly convergent; kept as the independent cross-check.
Complex c_rq_series(int r, int q, std::int64_t terms);

/// Closed form of psi(u, r, q) = -sum_{n == r (mod q), n != 0} e^{2 pi i n u}/(2 pi i n)
/// for 1 <= r <= q.  For r < q this is the periodic step function
/// c(r,q) - (1/q)(1/2 + sum_{1<=l<=qu} e^{2 pi i l r / q}) on (0,1], with the
/// l = qu term halved at grid points.  For r = q it is the scaled sawtooth
/// (1/q) psi(qu), with value 0 at integral qu (the symmetric-series value).
Complex psi_rq_closed(double u, int r, int q);

/// Symmetric truncation of the defining series over n = m q + r, |m| <= M
/// (n = 0 excluded).  The brute-force oracle for psi_rq_closed.
Complex psi_rq_series(double u, int r, int q, std::int64_t M);

/// Step-function data of psi(u, r, q) for 1 <= r < q.
struct ApKernelClosedForm {
  int r = 0;
  int q = 1;
  Complex c;                         // constant term c(r,q)
  std::vector<Complex> step_values;  // index l-1: value on ((l-1)/q, l/q), l = 1..q
  std::vector<Complex> jump_values;  // index l: value at l/q, l = 0..q

  static ApKernelClosedForm make(int r, int q);
};

/// psi(u) on [a, b] as a piecewise function (breaks at interior integers).
funcmodel::PiecewiseFn sawtooth_piecewise(double a, double b);

/// (1/q) psi(q u) on [0, 1] with breaks at the grid points l/q.
funcmodel::PiecewiseFn subq_sawtooth_piecewise(int q);

/// Real or imaginary part of the step kernel psi(u, r, q), 1 <= r < q, as a
/// step PiecewiseFn on [0, 1] (grid-point values are the jump midpoints).
funcmodel::PiecewiseFn step_kernel_piecewise(int r, int q, bool imaginary_part);

}  // namespace genfourier::kernels
