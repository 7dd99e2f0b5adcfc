#include <genfourier/fourier.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace genfourier::fourier {

namespace {

constexpr double kPi = std::numbers::pi;
using funcmodel::BreakSpec;
using funcmodel::Expr;
using funcmodel::ExprPtr;
using funcmodel::SmoothPiece;

// ---------------------------------------------------------------------------
// Closed-form oscillatory moments
// ---------------------------------------------------------------------------

// integral of e^{i kappa u} over [lo, hi], stable for all kappa.
Complex unit_moment(double kappa, double lo, double hi) {
  double len = hi - lo, mid = 0.5 * (lo + hi);
  double half = 0.5 * kappa * len;
  double sinc = half == 0.0 ? 1.0 : std::sin(half) / half;
  return len * sinc * std::polar(1.0, kappa * mid);
}

// integral of p(u) e^{-i omega u} over [lo, hi] through the antiderivative
// e^{su} sum_j (-1)^j p^(j)(u) / s^{j+1}, s = -i omega.  Only used when the
// phase advances enough across the piece for the evaluation to be stable.
Complex poly_moment(const std::vector<double>& p, double omega, double lo, double hi) {
  Complex s(0.0, -omega);
  // Derivative coefficient tables p, p', p'', ...
  std::vector<std::vector<double>> ds{p};
  while (ds.back().size() > 1) {
    const auto& prev = ds.back();
    std::vector<double> next(prev.size() - 1);
    for (size_t k = 1; k < prev.size(); ++k) next[k - 1] = prev[k] * static_cast<double>(k);
    ds.push_back(std::move(next));
  }
  auto horner = [](const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * u + c[k];
    return acc;
  };
  auto antideriv = [&](double u) {
    Complex acc(0.0, 0.0);
    Complex spow = s;  // s^{j+1}
    double sign = 1.0;
    for (size_t j = 0; j < ds.size(); ++j) {
      acc += sign * horner(ds[j], u) / spow;
      spow *= s;
      sign = -sign;
    }
    return std::exp(s * u) * acc;
  };
  return antideriv(hi) - antideriv(lo);
}

// Recursive closed form for integral of expr(u) e^{-i omega u}; nullopt when
// no closed form applies (the caller falls back to quadrature).
std::optional<Complex> analytic_moment(const ExprPtr& e, double omega, double lo, double hi) {
  using K = Expr::Kind;
  if (auto p = funcmodel::as_polynomial(e)) {
    if (omega == 0.0) {
      // Plain polynomial integral.
      double acc = 0.0;
      double plo = 1.0, phi = 1.0;
      for (size_t k = 0; k < p->size(); ++k) {
        plo *= lo;
        phi *= hi;
        acc += (*p)[k] * (phi - plo) / static_cast<double>(k + 1);
      }
      return Complex(acc, 0.0);
    }
    if (std::fabs(omega) * (hi - lo) < 4.0) return std::nullopt;  // stability guard
    return poly_moment(*p, omega, lo, hi);
  }
  switch (e->kind()) {
    case K::Negate: {
      auto m = analytic_moment(e->child(), omega, lo, hi);
      if (!m) return std::nullopt;
      return -*m;
    }
    case K::Add:
    case K::Sub: {
      auto ma = analytic_moment(e->lhs(), omega, lo, hi);
      if (!ma) return std::nullopt;
      auto mb = analytic_moment(e->rhs(), omega, lo, hi);
      if (!mb) return std::nullopt;
      return e->kind() == K::Add ? *ma + *mb : *ma - *mb;
    }
    case K::Mul: {
      if (e->lhs()->is_constant()) {
        auto m = analytic_moment(e->rhs(), omega, lo, hi);
        if (!m) return std::nullopt;
        return e->lhs()->eval(0.0) * *m;
      }
      if (e->rhs()->is_constant()) {
        auto m = analytic_moment(e->lhs(), omega, lo, hi);
        if (!m) return std::nullopt;
        return e->rhs()->eval(0.0) * *m;
      }
      return std::nullopt;
    }
    case K::Div: {
      if (!e->rhs()->is_constant()) return std::nullopt;
      auto m = analytic_moment(e->lhs(), omega, lo, hi);
      if (!m) return std::nullopt;
      return *m / e->rhs()->eval(0.0);
    }
    case K::Sin:
    case K::Cos: {
      auto arg = funcmodel::as_polynomial(e->child());
      if (!arg || arg->size() > 2) return std::nullopt;
      double beta = (*arg)[0];
      double alpha = arg->size() == 2 ? (*arg)[1] : 0.0;
      if (e->kind() == K::Sin) beta -= kPi / 2.0;  // sin(x) = cos(x - pi/2)
      // cos(alpha u + beta) e^{-i omega u}
      //   = (e^{i beta} e^{i(alpha-omega)u} + e^{-i beta} e^{-i(alpha+omega)u}) / 2
      Complex up = std::polar(0.5, beta) * unit_moment(alpha - omega, lo, hi);
      Complex down = std::polar(0.5, -beta) * unit_moment(-alpha - omega, lo, hi);
      return up + down;
    }
    default: return std::nullopt;
  }
}

}  // namespace

Complex oscillatory_moment(const PiecewiseFn& f, double lo, double hi, double omega,
                           const QuadratureConfig& cfg, double* est_error) {
  if (lo < f.domain_lo() || hi > f.domain_hi() || !(lo <= hi))
    throw DomainError("oscillatory_moment: window outside the function domain");
  Complex total(0.0, 0.0);
  double est = 0.0;
  for (const auto& p : f.pieces()) {
    double plo = std::max(p.lo, lo), phi = std::min(p.hi, hi);
    if (!(plo < phi)) continue;
    if (auto m = analytic_moment(p.expr, omega, plo, phi)) {
      total += *m;
      est += 1e-16 * (1.0 + std::abs(*m));
      continue;
    }
    // One panel per few oscillation periods keeps the refinement loop short.
    int min_panels = std::max(1, static_cast<int>(std::fabs(omega) * (phi - plo) / (2.0 * kPi)));
    const auto& expr = p.expr;
    auto q = quadrature::integrate_complex(
        [&expr, omega](double u) { return expr->eval(u) * std::polar(1.0, -omega * u); }, plo, phi,
        {}, cfg, min_panels);
    total += q.value;
    est += q.est_error;
  }
  if (est_error) *est_error = est;
  return total;
}

namespace {

// Shared coefficient computation: c_n = (1/2delta) moment(f, lo, hi, pi n / delta).
std::vector<Complex> window_coeffs(const PiecewiseFn& f, double lo, double hi, double delta, int N,
                                   const QuadratureConfig& cfg, double* max_est) {
  std::vector<Complex> out(2 * static_cast<size_t>(N) + 1);
  double worst = 0.0;
  for (int n = -N; n <= N; ++n) {
    double est = 0.0;
    Complex m = oscillatory_moment(f, lo, hi, kPi * n / delta, cfg, &est);
    out[static_cast<size_t>(n + N)] = m / (2.0 * delta);
    worst = std::max(worst, est);
  }
  if (max_est) *max_est = worst;
  return out;
}

Complex sum_orders(const std::vector<Complex>& c, int N, double theta, int l, bool include_mean,
                   const std::function<double(int)>& weight) {
  Complex acc = include_mean ? c[static_cast<size_t>(N)] : Complex(0.0, 0.0);
  for (int n = 1; n <= l; ++n) {
    Complex e = std::polar(1.0, n * theta);
    acc += weight(n) * (c[static_cast<size_t>(N + n)] * e +
                        c[static_cast<size_t>(N - n)] * std::conj(e));
  }
  return acc;
}

// psi((u - a)/two_delta) on [lo, hi] with lo <= a <= hi and
// hi - lo <= two_delta, so the single jump is at u = a.
PiecewiseFn forward_kernel(double lo, double hi, double a, double two_delta) {
  std::vector<SmoothPiece> pieces;
  ExprPtr slope = Expr::number(1.0 / two_delta);
  ExprPtr base = Expr::number(1.0 / two_delta) * (Expr::variable() - Expr::number(a));
  if (lo < a)
    pieces.push_back(SmoothPiece{lo, a, base + Expr::number(0.5), slope});
  if (a < hi)
    pieces.push_back(SmoothPiece{a, hi, base - Expr::number(0.5), slope});
  return PiecewiseFn::build(std::move(pieces), {BreakSpec{a, -0.5, std::nullopt, std::nullopt}},
                            true);
}

// psi((a - u)/two_delta) on [a, hi], hi - a <= two_delta; jump at u = a.
PiecewiseFn reflected_kernel(double a, double hi, double two_delta) {
  ExprPtr expr = Expr::number(1.0 / two_delta) * (Expr::number(a) - Expr::variable()) +
                 Expr::number(0.5);
  return PiecewiseFn::build({SmoothPiece{a, hi, expr, Expr::number(-1.0 / two_delta)}},
                            {BreakSpec{a, -0.5, std::nullopt, std::nullopt}}, true);
}

void check_theorem1_args(const PiecewiseFn& f, const Interval& iv, double a) {
  if (iv.c < f.domain_lo() || iv.d > f.domain_hi())
    throw DomainError("theorem1: interval outside the function domain");
  if (!(iv.c < a && a < iv.d)) throw ArgumentError("theorem1: requires c < a < d");
}

MidpointReport assemble(double lhs, double mean, double stieltjes, double boundary, double est) {
  MidpointReport r;
  r.lhs = lhs;
  r.mean_term = mean;
  r.stieltjes_term = stieltjes;
  r.boundary_term = boundary;
  r.rhs = mean + stieltjes + boundary;
  r.residual = std::fabs(r.lhs - r.rhs);
  r.est_error = est;
  return r;
}

}  // namespace

FourierCoeffs exp_coeffs(const PiecewiseFn& f, const Interval& iv, int N,
                         const QuadratureConfig& cfg) {
  if (N < 0) throw ArgumentError("exp_coeffs: N must be >= 0");
  if (iv.c < f.domain_lo() || iv.d > f.domain_hi())
    throw DomainError("exp_coeffs: interval outside the function domain");
  FourierCoeffs fc{iv, N, {}, 0.0};
  fc.c = window_coeffs(f, iv.c, iv.d, iv.delta, N, cfg, &fc.max_est_error);
  return fc;
}

TrigCoeffs trig_coeffs(const FourierCoeffs& fc) {
  TrigCoeffs t;
  t.a.resize(static_cast<size_t>(fc.N) + 1);
  t.b.assign(static_cast<size_t>(fc.N) + 1, Complex(0.0, 0.0));
  t.a[0] = 2.0 * fc.coeff(0);
  for (int n = 1; n <= fc.N; ++n) {
    t.a[static_cast<size_t>(n)] = fc.coeff(n) + fc.coeff(-n);
    t.b[static_cast<size_t>(n)] = Complex(0.0, 1.0) * (fc.coeff(n) - fc.coeff(-n));
  }
  return t;
}

Complex partial_sum(const FourierCoeffs& fc, double x, int l, bool include_mean) {
  if (l < 0 || l > fc.N) throw ArgumentError("partial_sum: order exceeds the computed range");
  double theta = kPi * x / fc.interval.delta;
  return sum_orders(fc.c, fc.N, theta, l, include_mean, [](int) { return 1.0; });
}

Complex cesaro_mean(const FourierCoeffs& fc, double x, int N, bool include_mean) {
  if (N < 1 || N > fc.N) throw ArgumentError("cesaro_mean: order exceeds the computed range");
  double theta = kPi * x / fc.interval.delta;
  return sum_orders(fc.c, fc.N, theta, N - 1, include_mean,
                    [N](int n) { return static_cast<double>(N - n) / N; });
}

MidpointReport theorem1_left(const PiecewiseFn& f, const Interval& iv, double a,
                             const QuadratureConfig& cfg) {
  check_theorem1_args(f, iv, a);
  double two_delta = 2.0 * iv.delta;
  double limit = f.left_limit(a);
  PiecewiseFn window = f.restricted(iv.c, a, std::nullopt, limit);
  PiecewiseFn kernel = forward_kernel(iv.c, a, a, two_delta);
  auto mean = stieltjes::integrate_piecewise(window, iv.c, a, cfg);
  auto st = stieltjes::rs_smooth(kernel, window, iv.c, a, cfg);
  double boundary = f.eval(iv.c) * (0.5 - (a - iv.c) / two_delta);
  return assemble(limit / 2.0, mean.value / two_delta, st.value, boundary,
                  mean.est_error / two_delta + st.est_error);
}

MidpointReport theorem1_right(const PiecewiseFn& f, const Interval& iv, double a,
                              const QuadratureConfig& cfg) {
  check_theorem1_args(f, iv, a);
  double two_delta = 2.0 * iv.delta;
  double limit = f.right_limit(a);
  PiecewiseFn window = f.restricted(a, iv.d, limit, std::nullopt);
  PiecewiseFn kernel = reflected_kernel(a, iv.d, two_delta);
  auto mean = stieltjes::integrate_piecewise(window, a, iv.d, cfg);
  auto st = stieltjes::rs_smooth(kernel, window, a, iv.d, cfg);
  double boundary = f.eval(iv.d) * (0.5 - (iv.d - a) / two_delta);
  return assemble(limit / 2.0, mean.value / two_delta, -st.value, boundary,
                  mean.est_error / two_delta + st.est_error);
}

MidpointReport theorem1_both(const PiecewiseFn& f, const Interval& iv, double a,
                             const QuadratureConfig& cfg) {
  check_theorem1_args(f, iv, a);
  if (f.eval(iv.c) != f.eval(iv.d))
    throw PreconditionError("theorem1_both: requires f(c) == f(d) on stored values");
  double two_delta = 2.0 * iv.delta;
  double left = f.left_limit(a), right = f.right_limit(a);

  PiecewiseFn wl = f.restricted(iv.c, a, std::nullopt, left);
  PiecewiseFn wr = f.restricted(a, iv.d, right, std::nullopt);
  auto stl = stieltjes::rs_smooth(forward_kernel(iv.c, a, a, two_delta), wl, iv.c, a, cfg);
  auto str = stieltjes::rs_smooth(forward_kernel(a, iv.d, a, two_delta), wr, a, iv.d, cfg);
  auto mean = stieltjes::integrate_piecewise(f, iv.c, iv.d, cfg);
  return assemble((left + right) / 2.0, mean.value / two_delta, stl.value + str.value, 0.0,
                  mean.est_error / two_delta + stl.est_error + str.est_error);
}

Complex local_series(const PiecewiseFn& f, double a, double delta, Side side, int N, SumMode mode,
                     const QuadratureConfig& cfg) {
  if (!(delta > 0)) throw ArgumentError("local_series: delta must be positive");
  if (N < 1) throw ArgumentError("local_series: N must be >= 1");
  double lo = side == Side::Right ? a : a - delta;
  double hi = side == Side::Left ? a : a + delta;
  if (lo < f.domain_lo() || hi > f.domain_hi())
    throw DomainError("local_series: window outside the function domain");
  std::vector<Complex> c = window_coeffs(f, lo, hi, delta, N, cfg, nullptr);
  double theta = kPi * a / delta;
  Complex v = mode == SumMode::Direct
                  ? sum_orders(c, N, theta, N, true, [](int) { return 1.0; })
                  : sum_orders(c, N, theta, N - 1, true,
                               [N](int n) { return static_cast<double>(N - n) / N; });
  // One-sided windows carry half the interval, so the series sums to half
  // the one-sided limit; normalize by the window length to return the limit
  // itself (a constant then reproduces itself exactly at every order).
  return side == Side::Both ? v : 2.0 * v;
}

}  // namespace genfourier::fourier
