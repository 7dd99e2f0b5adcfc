#include <genfourier/stieltjes.hpp>
#include <genfourier/kernels.hpp>

#include <cmath>
#include <cstdio>

namespace genfourier::stieltjes {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_range(const PiecewiseFn& f, double a, double b, const char* what) {
  if (!(a < b)) throw ArgumentError(std::string(what) + ": requires a < b");
  if (a < f.domain_lo() || b > f.domain_hi())
    throw DomainError(std::string(what) + ": [" + fmt(a) + ", " + fmt(b) +
                      "] outside the function domain");
}

// One-sided discontinuity tests against the stored point value.
bool left_discontinuous(const PiecewiseFn& f, double x) {
  const auto* bp = f.breakpoint_at(x);
  return bp && bp->left_value && *bp->left_value != bp->value_at;
}

bool right_discontinuous(const PiecewiseFn& f, double x) {
  const auto* bp = f.breakpoint_at(x);
  return bp && bp->right_value && *bp->right_value != bp->value_at;
}

}  // namespace

std::vector<Atom> atoms_of(const PiecewiseFn& f, double a, double b) {
  std::vector<Atom> out;
  for (const auto& bp : f.breakpoints()) {
    if (bp.x < a || bp.x > b) continue;
    Atom atom;
    atom.x = bp.x;
    if (bp.x > a && bp.left_value) atom.delta_minus = bp.value_at - *bp.left_value;
    if (bp.x < b && bp.right_value) atom.delta_plus = *bp.right_value - bp.value_at;
    if (atom.delta_minus != 0.0 || atom.delta_plus != 0.0) out.push_back(atom);
  }
  return out;
}

bool rs_compatible(const PiecewiseFn& g, const PiecewiseFn& f, double a, double b,
                   std::string* why) {
  for (const Atom& atom : atoms_of(f, a, b)) {
    if (atom.delta_minus != 0.0 && left_discontinuous(g, atom.x)) {
      if (why)
        *why = "both functions are discontinuous from the left at " + fmt(atom.x);
      return false;
    }
    if (atom.delta_plus != 0.0 && right_discontinuous(g, atom.x)) {
      if (why)
        *why = "both functions are discontinuous from the right at " + fmt(atom.x);
      return false;
    }
  }
  return true;
}

double rs_step_integrator(const PiecewiseFn& f, const PiecewiseFn& alpha, double a, double b) {
  check_range(f, a, b, "rs_step_integrator");
  check_range(alpha, a, b, "rs_step_integrator");
  if (!alpha.is_step())
    throw ArgumentError("rs_step_integrator: the integrator is not a step function");
  std::string why;
  if (!rs_compatible(f, alpha, a, b, &why))
    throw IntegrabilityError("rs_step_integrator: " + why);
  double acc = 0.0;
  for (const Atom& atom : atoms_of(alpha, a, b)) acc += f.eval(atom.x) * atom.total();
  return acc;
}

StieltjesResult rs_smooth(const PiecewiseFn& g, const PiecewiseFn& f, double a, double b,
                          const QuadratureConfig& cfg) {
  check_range(f, a, b, "rs_smooth");
  check_range(g, a, b, "rs_smooth");

  for (const auto& p : f.pieces()) {
    double lo = std::max(p.lo, a), hi = std::min(p.hi, b);
    if (lo < hi && !p.is_constant() && !p.deriv)
      throw IntegrabilityError("rs_smooth: integrator lacks a derivative on the non-constant "
                               "piece [" + fmt(p.lo) + ", " + fmt(p.hi) + "]");
  }
  std::string why;
  if (!rs_compatible(g, f, a, b, &why)) throw IntegrabilityError("rs_smooth: " + why);

  StieltjesResult res;
  std::vector<double> splits;
  for (const auto& bp : g.breakpoints()) splits.push_back(bp.x);

  for (const auto& p : f.pieces()) {
    double lo = std::max(p.lo, a), hi = std::min(p.hi, b);
    if (!(lo < hi) || p.is_constant()) continue;
    const auto& deriv = p.deriv;
    auto integrand = [&g, &deriv](double u) { return g.eval(u) * deriv->eval(u); };
    auto q = quadrature::integrate(integrand, lo, hi, splits, cfg);
    res.smooth_part += q.value;
    res.est_error += q.est_error;
  }
  for (const Atom& atom : atoms_of(f, a, b)) res.atom_part += g.eval(atom.x) * atom.total();
  res.value = res.smooth_part + res.atom_part;
  return res;
}

double integrate_by_parts(const PiecewiseFn& f, const PiecewiseFn& alpha, double a, double b,
                          const QuadratureConfig& cfg) {
  check_range(f, a, b, "integrate_by_parts");
  check_range(alpha, a, b, "integrate_by_parts");
  double f_dalpha;
  if (alpha.is_step()) {
    f_dalpha = rs_step_integrator(f, alpha, a, b);
  } else {
    f_dalpha = rs_smooth(f, alpha, a, b, cfg).value;
  }
  return f.eval(b) * alpha.eval(b) - f.eval(a) * alpha.eval(a) - f_dalpha;
}

double euler_sum_rhs(const PiecewiseFn& f, double a, double b, const QuadratureConfig& cfg) {
  check_range(f, a, b, "euler_sum_rhs");
  for (double n = std::floor(a) + 1.0; n <= b; n += 1.0) {
    if (n <= a) continue;
    if (left_discontinuous(f, n))
      throw PreconditionError("euler_sum_rhs: f is discontinuous from the left at the integer " +
                              fmt(n));
  }
  auto psi_kernel = kernels::sawtooth_piecewise(a, b);
  auto mean = integrate_piecewise(f, a, b, cfg);
  auto st = rs_smooth(psi_kernel, f, a, b, cfg);
  return mean.value + st.value + f.eval(a) * kernels::psi(a) - f.eval(b) * kernels::psi(b);
}

double one_sided_via_stieltjes(const PiecewiseFn& f, double a, double epsilon, double delta,
                               Side side) {
  using namespace funcmodel;
  if (!(epsilon > 0) || !(delta > 0) || epsilon > delta)
    throw ArgumentError("one_sided_via_stieltjes: requires 0 < epsilon <= delta");
  if (side == Side::Left) {
    double lo = a - epsilon;
    check_range(f, lo, a, "one_sided_via_stieltjes");
    double limit = f.left_limit(a);
    PiecewiseFn window = f.restricted(lo, a, std::nullopt, limit);
    // floor((u - a)/delta) on [a - epsilon, a]: -1 below a, 0 at a.
    PiecewiseFn step = PiecewiseFn::build({SmoothPiece{lo, a, Expr::number(-1.0), nullptr}},
                                          {BreakSpec{a, 0.0, -1.0, std::nullopt}}, true);
    return rs_step_integrator(window, step, lo, a);
  }
  double hi = a + epsilon;
  check_range(f, a, hi, "one_sided_via_stieltjes");
  double limit = f.right_limit(a);
  PiecewiseFn window = f.restricted(a, hi, limit, std::nullopt);
  // floor((a - u)/delta) on [a, a + epsilon]: 0 at a, -1 above.
  PiecewiseFn step = PiecewiseFn::build({SmoothPiece{a, hi, Expr::number(-1.0), nullptr}},
                                        {BreakSpec{a, 0.0, std::nullopt, -1.0}}, true);
  return -rs_step_integrator(window, step, a, hi);
}

quadrature::QuadResult<double> integrate_piecewise(const PiecewiseFn& f, double a, double b,
                                                   const QuadratureConfig& cfg) {
  check_range(f, a, b, "integrate_piecewise");
  quadrature::QuadResult<double> out;
  for (const auto& p : f.pieces()) {
    double lo = std::max(p.lo, a), hi = std::min(p.hi, b);
    if (!(lo < hi)) continue;
    const auto& expr = p.expr;
    auto q = quadrature::integrate([&expr](double u) { return expr->eval(u); }, lo, hi, {}, cfg);
    out.value += q.value;
    out.est_error += q.est_error;
  }
  return out;
}

}  // namespace genfourier::stieltjes
