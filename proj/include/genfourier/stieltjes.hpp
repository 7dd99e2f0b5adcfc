#pragma once

#include <genfourier/funcmodel.hpp>
#include <genfourier/quadrature.hpp>

#include <string>
#include <vector>

namespace genfourier::stieltjes {

using funcmodel::PiecewiseFn;
using quadrature::QuadratureConfig;

/// Decomposition of a Riemann-Stieltjes integral against a piecewise
/// integrator: the quadrature part over the smooth pieces plus the jump
/// (atom) contributions.  value == smooth_part + atom_part.
struct StieltjesResult {
  double value = 0.0;
  double smooth_part = 0.0;
  double atom_part = 0.0;
  double est_error = 0.0;
};

/// A jump of the integrator inside [a, b], split into its one-sided parts.
/// At the range endpoints only the inward side counts: at x = a the jump is
/// f(a+) - f(a); at x = b it is f(b) - f(b-).
struct Atom {
  double x = 0.0;
  double delta_minus = 0.0;  // f(x) - f(x-)
  double delta_plus = 0.0;   // f(x+) - f(x)
  double total() const { return delta_minus + delta_plus; }
};

/// Jump points of f within [a, b] with the endpoint conventions above.
std::vector<Atom> atoms_of(const PiecewiseFn& f, double a, double b);

/// The existence condition for the Riemann-Stieltjes integral of g against
/// df on [a, b]: at no jump of f may g be discontinuous from the same side.
/// On failure `why` (if non-null) describes the offending point.
bool rs_compatible(const PiecewiseFn& g, const PiecewiseFn& f, double a, double b,
                   std::string* why = nullptr);

/// Integral of f against a step integrator alpha over [a, b]: the finite sum
/// of f(x_k) times the jumps of alpha.  Throws ArgumentError if alpha is not
/// a step function and IntegrabilityError if f and alpha share a same-side
/// discontinuity.
double rs_step_integrator(const PiecewiseFn& f, const PiecewiseFn& alpha, double a, double b);

/// Integral of g against df for a good piecewise integrator f: quadrature of
/// g f' over the smooth pieces (panels split at every breakpoint of g) plus
/// g(x_k) times the jumps of f.  Jumps located at panel boundaries enter only
/// through the breakpoint list, never through quadrature.
StieltjesResult rs_smooth(const PiecewiseFn& g, const PiecewiseFn& f, double a, double b,
                          const QuadratureConfig& cfg);

/// Integral of alpha against df evaluated through integration by parts:
/// f(b) alpha(b) - f(a) alpha(a) - integral of f against d(alpha), the latter
/// taken by the step rule when alpha is a step function and by rs_smooth
/// otherwise.
double integrate_by_parts(const PiecewiseFn& f, const PiecewiseFn& alpha, double a, double b,
                          const QuadratureConfig& cfg);

/// Right side of the generalized Euler summation formula on [a, b]:
///   integral of f + integral of psi(u) df + f(a) psi(a) - f(b) psi(b),
/// which equals the sum of f(n) over integers a < n <= b when f is
/// continuous from the left at those integers (checked).
double euler_sum_rhs(const PiecewiseFn& f, double a, double b, const QuadratureConfig& cfg);

enum class Side { Left, Right };

/// One-sided limit of f at a recovered through the Stieltjes integral of f
/// against the unit-step integrator floor((u -+ a)/delta) over a window of
/// width epsilon (0 < epsilon <= delta).  The integrator has its single jump
/// at u = a, approached from inside the window, so the value is f(a-)
/// (resp. f(a+)) independent of epsilon.
double one_sided_via_stieltjes(const PiecewiseFn& f, double a, double epsilon, double delta,
                               Side side);

/// Plain integral of f over [a, b] by per-piece quadrature.
quadrature::QuadResult<double> integrate_piecewise(const PiecewiseFn& f, double a, double b,
                                                   const QuadratureConfig& cfg);

}  // namespace genfourier::stieltjes
