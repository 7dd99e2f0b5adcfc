#include <genfourier/kernels.hpp>

#include <cmath>
#include <numbers>

namespace genfourier::kernels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Snap tolerance for detecting grid points q*u = integer from doubles.
constexpr double kGridTol = 1e-9;

void check_rq(int r, int q, bool allow_equal) {
  if (q < 1) throw ArgumentError("kernel: modulus q must be >= 1");
  if (r < 1 || r > q || (!allow_equal && r == q))
    throw ArgumentError("kernel: residue r out of range for q = " + std::to_string(q));
}

// e^{2 pi i j r / q} computed from the reduced integer phase.
Complex root_of_unity(long long j, int r, int q) {
  long long m = (j * r) % q;
  if (m < 0) m += q;
  return std::polar(1.0, kTwoPi * static_cast<double>(m) / q);
}

}  // namespace

double psi(double u) { return u - std::floor(u) - 0.5; }

double psi_partial(double u, std::int64_t l) {
  if (l < 1) throw ArgumentError("psi_partial: l must be >= 1");
  double acc = 0.0;
  for (std::int64_t n = 1; n <= l; ++n) acc -= std::sin(kTwoPi * n * u) / (kPi * n);
  return acc;
}

double psi_cesaro(double u, std::int64_t N) {
  if (N < 1) throw ArgumentError("psi_cesaro: N must be >= 1");
  // (1/N) sum_{l=1..N} sum_{n=1..l} t_n = sum_{n=1..N} (N - n + 1)/N * t_n.
  double acc = 0.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    double w = static_cast<double>(N - n + 1) / static_cast<double>(N);
    acc -= w * std::sin(kTwoPi * n * u) / (kPi * n);
  }
  return acc;
}

Complex c_rq(int r, int q) {
  check_rq(r, q, false);
  // cot(pi r / q) written as tan(pi (q - 2r) / (2q)) so that the value is an
  // exact zero at r/q = 1/2.
  double t = std::tan(kPi * static_cast<double>(q - 2 * r) / (2.0 * q));
  return Complex(0.0, t / (2.0 * q));
}

Complex c_rq_series(int r, int q, std::int64_t terms) {
  check_rq(r, q, false);
  if (terms < 1) throw ArgumentError("c_rq_series: terms must be >= 1");
  // Summed smallest-terms-first for accuracy.
  double s = 0.0;
  for (std::int64_t m = terms; m >= 1; --m) {
    double mq = static_cast<double>(m) * q;
    s += 1.0 / (mq * mq - static_cast<double>(r) * r);
  }
  double inner = 1.0 / r - 2.0 * r * s;
  // -(1/(2 pi i)) * inner = (i / (2 pi)) * inner
  return Complex(0.0, inner / kTwoPi);
}

Complex psi_rq_closed(double u, int r, int q) {
  check_rq(r, q, true);
  if (r == q) {
    double qu = static_cast<double>(q) * u;
    double k = std::round(qu);
    if (std::fabs(qu - k) <= kGridTol * q) return Complex(0.0, 0.0);
    return Complex(psi(qu) / q, 0.0);
  }
  // Reduce u to (0, 1] by periodicity.
  double t = u - std::floor(u);
  if (t == 0.0) t = 1.0;
  double qt = static_cast<double>(q) * t;
  double k = std::round(qt);
  bool on_grid = std::fabs(qt - k) <= kGridTol * q && k >= 1.0;

  long long full = on_grid ? static_cast<long long>(k) - 1 : static_cast<long long>(std::floor(qt));
  Complex sum(0.0, 0.0);
  for (long long j = 1; j <= full; ++j) sum += root_of_unity(j, r, q);
  if (on_grid) sum += 0.5 * root_of_unity(static_cast<long long>(k), r, q);
  return c_rq(r, q) - (Complex(0.5, 0.0) + sum) / static_cast<double>(q);
}

Complex psi_rq_series(double u, int r, int q, std::int64_t M) {
  check_rq(r, q, true);
  if (M < 1) throw ArgumentError("psi_rq_series: M must be >= 1");
  if (r == q) {
    // Frequencies n = m q, m != 0; the paired terms are real sine terms.
    double acc = 0.0;
    for (std::int64_t m = M; m >= 1; --m) {
      double n = static_cast<double>(m) * q;
      acc -= std::sin(kTwoPi * n * u) / (kPi * n);
    }
    return Complex(acc, 0.0);
  }
  // Frequencies n == r (mod q) truncated symmetrically in |n| at
  // L = M q + r, so that +-n pairs are kept together (at integer u the
  // paired terms cancel exactly when the residue class is +-symmetric).
  const std::int64_t L = M * static_cast<std::int64_t>(q) + r;
  const Complex rot = std::polar(1.0, kTwoPi * q * u);
  const Complex rot_inv = std::conj(rot);
  const Complex base = std::polar(1.0, kTwoPi * r * u);
  const Complex i2pi(0.0, kTwoPi);

  Complex acc(0.0, 0.0);
  Complex up = base;
  for (std::int64_t n = r; n <= L; n += q) {
    acc -= up / (i2pi * static_cast<double>(n));
    up *= rot;
  }
  Complex down = base * rot_inv;
  for (std::int64_t n = r - q; n >= -L; n -= q) {
    acc -= down / (i2pi * static_cast<double>(n));
    down *= rot_inv;
  }
  return acc;
}

ApKernelClosedForm ApKernelClosedForm::make(int r, int q) {
  check_rq(r, q, false);
  ApKernelClosedForm k;
  k.r = r;
  k.q = q;
  k.c = c_rq(r, q);
  k.step_values.resize(q);
  k.jump_values.resize(q + 1);

  Complex prefix(0.0, 0.0);  // sum_{j=1..l-1} e^{2 pi i j r / q}
  for (int l = 1; l <= q; ++l) {
    k.step_values[l - 1] = k.c - (Complex(0.5, 0.0) + prefix) / static_cast<double>(q);
    Complex e_l = root_of_unity(l, r, q);
    k.jump_values[l] = k.c - (Complex(0.5, 0.0) + prefix + 0.5 * e_l) / static_cast<double>(q);
    prefix += e_l;
  }
  k.jump_values[0] = k.jump_values[q];  // period 1
  return k;
}

funcmodel::PiecewiseFn sawtooth_piecewise(double a, double b) {
  using namespace funcmodel;
  if (!(a < b)) throw ArgumentError("sawtooth_piecewise: requires a < b");
  std::vector<double> edges{a};
  for (double n = std::floor(a) + 1.0; n < b; n += 1.0)
    if (n > a) edges.push_back(n);
  edges.push_back(b);

  std::vector<SmoothPiece> pieces;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    double mid = 0.5 * (edges[i] + edges[i + 1]);
    double m = std::floor(mid);
    pieces.push_back(SmoothPiece{edges[i], edges[i + 1],
                                 Expr::variable() - Expr::number(m + 0.5), Expr::number(1.0)});
  }
  std::vector<BreakSpec> specs;
  for (double e : edges)
    if (e == std::floor(e)) specs.push_back(BreakSpec{e, -0.5, std::nullopt, std::nullopt});
  return PiecewiseFn::build(std::move(pieces), std::move(specs), true);
}

funcmodel::PiecewiseFn subq_sawtooth_piecewise(int q) {
  using namespace funcmodel;
  if (q < 1) throw ArgumentError("subq_sawtooth_piecewise: q must be >= 1");
  std::vector<SmoothPiece> pieces;
  std::vector<BreakSpec> specs;
  for (int l = 1; l <= q; ++l) {
    double lo = static_cast<double>(l - 1) / q;
    double hi = static_cast<double>(l) / q;
    // (1/q) psi(q u) = u - (l - 1)/q - 1/(2q) on the cell.
    pieces.push_back(SmoothPiece{lo, hi,
                                 Expr::variable() - Expr::number(lo + 0.5 / q),
                                 Expr::number(1.0)});
    specs.push_back(BreakSpec{lo, -0.5 / q, std::nullopt, std::nullopt});
  }
  specs.push_back(BreakSpec{1.0, -0.5 / q, std::nullopt, std::nullopt});
  return PiecewiseFn::build(std::move(pieces), std::move(specs), true);
}

funcmodel::PiecewiseFn step_kernel_piecewise(int r, int q, bool imaginary_part) {
  using namespace funcmodel;
  auto k = ApKernelClosedForm::make(r, q);
  auto part = [&](const Complex& z) { return imaginary_part ? z.imag() : z.real(); };
  std::vector<SmoothPiece> pieces;
  std::vector<BreakSpec> specs;
  for (int l = 1; l <= q; ++l) {
    double lo = static_cast<double>(l - 1) / q;
    double hi = static_cast<double>(l) / q;
    pieces.push_back(SmoothPiece{lo, hi, Expr::number(part(k.step_values[l - 1])), nullptr});
  }
  for (int l = 0; l <= q; ++l)
    specs.push_back(BreakSpec{static_cast<double>(l) / q, part(k.jump_values[l]), std::nullopt,
                              std::nullopt});
  return PiecewiseFn::build(std::move(pieces), std::move(specs), true);
}

}  // namespace genfourier::kernels
