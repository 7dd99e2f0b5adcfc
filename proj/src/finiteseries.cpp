#include <genfourier/finiteseries.hpp>

#include <genfourier/kernels.hpp>
#include <genfourier/stieltjes.hpp>

#include <cmath>
#include <numbers>

namespace genfourier::finiteseries {

namespace {

Complex grid_root(long long j, int q) {
  long long m = j % q;
  if (m < 0) m += q;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / q);
}

void check_hypotheses(const PiecewiseFn& f, int q) {
  if (q < 1) throw ArgumentError("finite_coeffs: q must be >= 1");
  if (f.domain_lo() != 0.0 || f.domain_hi() != 1.0)
    throw DomainError("finite_coeffs: f must live on the unit interval");
  if (f.eval(0.0) != f.eval(1.0))
    throw PreconditionError("finite_coeffs: requires f(0) == f(1)");
  for (int l = 1; l <= q; ++l) {
    double x = static_cast<double>(l) / q;
    const auto* bp = f.breakpoint_at(x);
    if (!bp) continue;
    bool cont = (!bp->left_value || *bp->left_value == bp->value_at) &&
                (!bp->right_value || *bp->right_value == bp->value_at);
    if (!cont)
      throw PreconditionError("finite_coeffs: f is discontinuous at the grid point " +
                              std::to_string(l) + "/" + std::to_string(q));
  }
  if (!f.is_good())
    throw IntegrabilityError("finite_coeffs: f is neither of bounded variation nor piecewise "
                             "differentiable");
}

}  // namespace

FiniteFourier finite_coeffs(const PiecewiseFn& f, int q, const QuadratureConfig& cfg) {
  check_hypotheses(f, q);
  FiniteFourier ff;
  ff.q = q;
  ff.b.assign(static_cast<size_t>(q), Complex(0.0, 0.0));
  ff.grid_values.resize(static_cast<size_t>(q) + 1);
  for (int l = 0; l <= q; ++l) ff.grid_values[static_cast<size_t>(l)] = f.eval(static_cast<double>(l) / q);

  // b_0: mean plus the scaled-sawtooth Stieltjes term.
  auto mean = stieltjes::integrate_piecewise(f, 0.0, 1.0, cfg);
  auto saw = stieltjes::rs_smooth(kernels::subq_sawtooth_piecewise(q), f, 0.0, 1.0, cfg);
  ff.b[0] = Complex(mean.value + saw.value, 0.0);

  // b_r = integral of the step kernel psi(u, q-r, q) against df, evaluated
  // as the exact grid-increment sum.
  for (int r = 1; r < q; ++r) {
    auto kernel = kernels::ApKernelClosedForm::make(q - r, q);
    Complex acc(0.0, 0.0);
    for (int l = 1; l <= q; ++l)
      acc += kernel.step_values[static_cast<size_t>(l - 1)] *
             (ff.grid_values[static_cast<size_t>(l)] - ff.grid_values[static_cast<size_t>(l - 1)]);
    ff.b[static_cast<size_t>(r)] = acc;
  }
  return ff;
}

Complex reconstruct(const FiniteFourier& ff, int a) {
  if (a < 1 || a > ff.q) throw ArgumentError("reconstruct: requires 1 <= a <= q");
  Complex acc = ff.b[0];
  for (int r = 1; r < ff.q; ++r)
    acc += ff.b[static_cast<size_t>(r)] * grid_root(static_cast<long long>(r) * a, ff.q);
  return acc;
}

IndependenceReport coefficient_independence_check(const PiecewiseFn& f, int q,
                                                  const QuadratureConfig& cfg, double tol) {
  FiniteFourier ff = finite_coeffs(f, q, cfg);
  IndependenceReport rep;
  for (int a = 1; a <= q; ++a) {
    double target = f.eval(static_cast<double>(a) / q);
    rep.max_residual = std::max(rep.max_residual, std::abs(reconstruct(ff, a) - target));
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

Complex finite_coeff_quadrature(const PiecewiseFn& f, int r, int q, const QuadratureConfig& cfg) {
  if (r < 1 || r >= q) throw ArgumentError("finite_coeff_quadrature: requires 1 <= r < q");
  check_hypotheses(f, q);
  auto re = stieltjes::rs_smooth(kernels::step_kernel_piecewise(q - r, q, false), f, 0.0, 1.0, cfg);
  auto im = stieltjes::rs_smooth(kernels::step_kernel_piecewise(q - r, q, true), f, 0.0, 1.0, cfg);
  return Complex(re.value, im.value);
}

}  // namespace genfourier::finiteseries
