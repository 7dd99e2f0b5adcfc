#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genfourier/fourier.hpp>
#include <genfourier/kernels.hpp>

#include <cmath>
#include <numbers>

using namespace genfourier;
using namespace genfourier::fourier;
using funcmodel::builtin_catalog;
using funcmodel::FunctionCatalog;

namespace {

constexpr double kPi = std::numbers::pi;

const FunctionCatalog& cat() {
  static FunctionCatalog c = builtin_catalog();
  return c;
}

QuadratureConfig quad;
const Interval unit(0.0, 1.0);

}  // namespace

TEST_CASE("exponential coefficients: closed-form oracles") {
  // f(u) = u on [0,1]: by parts, c_0 = 1/2 and c_n = i/(2 pi n) for n != 0.
  auto fc = exp_coeffs(cat().get("identity"), unit, 8, quad);
  CHECK(std::abs(fc.coeff(0) - Complex(0.5, 0.0)) < 1e-13);
  for (int n = 1; n <= 8; ++n) {
    CHECK(std::abs(fc.coeff(n) - Complex(0.0, 1.0 / (2 * kPi * n))) < 1e-13);
    CHECK(std::abs(fc.coeff(-n) - std::conj(fc.coeff(n))) < 1e-12);  // real f
  }
  // constant k: c_0 = k, the rest vanish.
  auto fk = exp_coeffs(cat().get("const_one"), unit, 5, quad);
  CHECK(std::abs(fk.coeff(0) - Complex(1.0, 0.0)) < 1e-14);
  for (int n = 1; n <= 5; ++n) CHECK(std::abs(fk.coeff(n)) < 1e-14);
  // cos(2 pi u): c_{+-1} = 1/2 by orthonormality, all else 0.
  auto fcos = exp_coeffs(cat().get("cosine"), unit, 5, quad);
  CHECK(std::abs(fcos.coeff(1) - Complex(0.5, 0.0)) < 1e-13);
  CHECK(std::abs(fcos.coeff(-1) - Complex(0.5, 0.0)) < 1e-13);
  for (int n : {0, 2, 3, 4, 5}) CHECK(std::abs(fcos.coeff(n)) < 1e-13);
}

TEST_CASE("coefficients on a shifted interval keep conjugate symmetry") {
  Interval iv(0.25, 0.75);
  auto fc = exp_coeffs(cat().get("square"), iv, 12, quad);
  for (int n = 1; n <= 12; ++n)
    CHECK(std::abs(fc.coeff(-n) - std::conj(fc.coeff(n))) < 1e-12);
}

TEST_CASE("analytic moments agree with the quadrature fallback") {
  // Compare the per-piece closed forms against brute quadrature on a grid of
  // frequencies, including zero and non-resonant values.
  for (const char* name : {"identity", "square", "parabola", "cosine", "vkink", "sawtooth"}) {
    const auto& f = cat().get(name);
    for (double omega : {0.0, 0.7, 2 * kPi, 31.4, 377.1}) {
      Complex a = oscillatory_moment(f, 0.0, 1.0, omega, quad, nullptr);
      auto q = quadrature::integrate_complex(
          [&f, omega](double u) { return f.eval(u) * std::polar(1.0, -omega * u); }, 0.0, 1.0,
          {0.5}, quad, 8);
      CHECK(std::abs(a - q.value) < 1e-11);
    }
  }
}

TEST_CASE("trigonometric view and reconstruction equality") {
  auto fc = exp_coeffs(cat().get("identity"), unit, 32, quad);
  auto t = trig_coeffs(fc);
  CHECK(std::abs(t.a[0] - Complex(1.0, 0.0)) < 1e-13);  // a_0 = 2 c_0 = 1
  for (int n = 1; n <= 32; ++n) {
    CHECK(std::abs(t.a[n]) < 1e-13);
    CHECK(std::abs(t.b[n] - Complex(-1.0 / (kPi * n), 0.0)) < 1e-13);
    CHECK(std::fabs(t.a[n].imag()) < 1e-12);  // real f: real trig coefficients
    CHECK(std::fabs(t.b[n].imag()) < 1e-12);
  }
  // The trig partial sum must equal the exponential partial sum.
  auto fcos = exp_coeffs(cat().get("cosine"), unit, 16, quad);
  auto tc = trig_coeffs(fcos);
  CHECK(std::abs(tc.a[1] - Complex(1.0, 0.0)) < 1e-13);
  for (double x : {0.0, 0.21, 0.5, 0.77, 1.0}) {
    for (int l : {1, 5, 16}) {
      Complex expsum = partial_sum(fcos, x, l, true);
      Complex trigsum = 0.5 * tc.a[0];
      for (int n = 1; n <= l; ++n)
        trigsum += tc.a[n] * std::cos(kPi * n * x / fcos.interval.delta) +
                   tc.b[n] * std::sin(kPi * n * x / fcos.interval.delta);
      CHECK(std::abs(expsum - trigsum) < 1e-14);
    }
  }
}

TEST_CASE("partial sums: cancellation and the mean term") {
  auto fc = exp_coeffs(cat().get("identity"), unit, 64, quad);
  // x = 1/2: the +-n terms cancel pairwise, leaving c_0 = 1/2 exactly.
  for (int l : {1, 7, 64})
    CHECK(std::abs(partial_sum(fc, 0.5, l, true) - Complex(0.5, 0.0)) < 1e-13);
  CHECK(std::abs(partial_sum(fc, 0.5, 0, true) - fc.coeff(0)) == 0.0);
  auto fcos = exp_coeffs(cat().get("cosine"), unit, 4, quad);
  CHECK(std::abs(partial_sum(fcos, 0.25, 1, true)) < 1e-13);  // cos(pi/2) = 0
  CHECK_THROWS_AS(partial_sum(fc, 0.5, 65, true), ArgumentError);
}

TEST_CASE("partial sums converge for a smooth periodic function") {
  // u(1-u) has coefficients decaying like n^-2.
  auto fc = exp_coeffs(cat().get("parabola"), unit, 1000, quad);
  Complex v = partial_sum(fc, 0.3, 1000, true);
  CHECK(std::abs(v - Complex(0.21, 0.0)) <= 1e-3);
}

TEST_CASE("Cesaro mean: exact single-harmonic weight (N-1)/N") {
  auto fcos = exp_coeffs(cat().get("cosine"), unit, 50, quad);
  double expect = (50.0 - 1.0) / 50.0 * std::cos(0.6 * kPi);
  CHECK(std::abs(cesaro_mean(fcos, 0.3, 50, true) - Complex(expect, 0.0)) < 1e-12);
  // constant k reproduces itself.
  auto fk = exp_coeffs(cat().get("const_one"), unit, 10, quad);
  CHECK(std::abs(cesaro_mean(fk, 0.42, 10, true) - Complex(1.0, 0.0)) < 1e-13);
  // sawtooth at the periodic boundary point: the (c,1) value is the jump
  // midpoint 0 for every N (pairwise cancellation).
  auto fsaw = exp_coeffs(cat().get("sawtooth"), unit, 100, quad);
  for (int N : {1, 10, 100}) CHECK(std::abs(cesaro_mean(fsaw, 0.0, N, true)) < 1e-12);
}

TEST_CASE("Cesaro mean matches the mean of partial sums") {
  auto fc = exp_coeffs(cat().get("step_half"), unit, 40, quad);
  for (double x : {0.2, 0.5, 0.83}) {
    for (int N : {1, 5, 40}) {
      Complex naive(0.0, 0.0);
      for (int l = 0; l < N; ++l) naive += partial_sum(fc, x, l, true);
      naive /= static_cast<double>(N);
      CHECK(std::abs(cesaro_mean(fc, x, N, true) - naive) < 1e-13);
    }
  }
}

TEST_CASE("theorem1 left identity: worked cases") {
  // f = u at a = 1/2: mean 0.125, Stieltjes 0.125, boundary 0.
  auto r = theorem1_left(cat().get("identity"), unit, 0.5, quad);
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.mean_term == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(r.stieltjes_term == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(r.boundary_term == 0.0);
  CHECK(r.residual <= 1e-12);
  // constant k: k/2 on both sides.
  auto rc = theorem1_left(cat().get("const_one"), unit, 0.3, quad);
  CHECK(rc.lhs == 0.5);
  CHECK(rc.residual <= 1e-13);
  // unit step at its own jump: lhs = f(a-)/2 = 0, and the Stieltjes window
  // carries no atom.
  auto rs = theorem1_left(cat().get("step_half"), unit, 0.5, quad);
  CHECK(rs.lhs == 0.0);
  CHECK(rs.residual <= 1e-13);
}

TEST_CASE("theorem1 right identity: worked cases") {
  auto rc = theorem1_right(cat().get("const_one"), unit, 0.7, quad);
  CHECK(rc.lhs == 0.5);
  CHECK(rc.residual <= 1e-13);
  auto r = theorem1_right(cat().get("identity"), unit, 0.5, quad);
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.residual <= 1e-12);
  auto rs = theorem1_right(cat().get("step_half"), unit, 0.5, quad);
  CHECK(rs.lhs == 0.5);
  CHECK(rs.residual <= 1e-13);
}

TEST_CASE("theorem1 both: worked cases and the f(c)=f(d) precondition") {
  auto r = theorem1_both(cat().get("parabola"), unit, 0.5, quad);
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(r.residual <= 1e-12);
  auto rs = theorem1_both(cat().get("sawtooth"), unit, 0.5, quad);
  CHECK(rs.lhs == 0.0);
  CHECK(rs.residual <= 1e-12);
  CHECK_THROWS_AS(theorem1_both(cat().get("identity"), unit, 0.5, quad), PreconditionError);
  CHECK_THROWS_AS(theorem1_both(cat().get("parabola"), unit, 0.0, quad), ArgumentError);
}

TEST_CASE("theorem1 holds when the stored value at the jump is neither limit") {
  using funcmodel::BreakSpec;
  using funcmodel::Expr;
  using funcmodel::PiecewiseFn;
  using funcmodel::SmoothPiece;
  auto f = PiecewiseFn::build({SmoothPiece{0, 0.5, Expr::number(0), nullptr},
                               SmoothPiece{0.5, 1, Expr::number(1), nullptr}},
                              {BreakSpec{0.5, 0.7, 0.0, 1.0}}, true);
  auto rl = theorem1_left(f, unit, 0.5, quad);
  CHECK(rl.lhs == 0.0);
  CHECK(rl.residual <= 1e-13);
  auto rr = theorem1_right(f, unit, 0.5, quad);
  CHECK(rr.lhs == 0.5);
  CHECK(rr.residual <= 1e-13);
}

TEST_CASE("theorem1 identities across the catalog and interior points") {
  for (const char* name :
       {"identity", "square", "parabola", "cosine", "sawtooth", "step_half", "vkink"}) {
    const auto& f = cat().get(name);
    for (int i = 1; i <= 9; ++i) {
      double a = i / 10.0;
      CAPTURE(name); CAPTURE(a);
      CHECK(theorem1_left(f, unit, a, quad).residual <= 1e-8);
      CHECK(theorem1_right(f, unit, a, quad).residual <= 1e-8);
    }
  }
  for (const char* name : {"parabola", "cosine", "sawtooth", "vkink", "const_one"}) {
    const auto& f = cat().get(name);
    for (int i = 1; i <= 9; ++i) {
      double a = i / 10.0;
      auto rb = theorem1_both(f, unit, a, quad);
      CHECK(rb.residual <= 1e-8);
      auto rl = theorem1_left(f, unit, a, quad);
      auto rr = theorem1_right(f, unit, a, quad);
      CHECK(std::fabs(rb.rhs - (rl.rhs + rr.rhs)) <= 1e-10);
    }
  }
}

TEST_CASE("local series: constants reproduce exactly, windows are checked") {
  for (auto side : {Side::Left, Side::Right, Side::Both}) {
    for (int N : {1, 3, 50}) {
      Complex v = local_series(cat().get("const_one"), 0.5, 0.25, side, N, SumMode::Direct, quad);
      CHECK(std::abs(v - Complex(1.0, 0.0)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(
      local_series(cat().get("identity"), 0.1, 0.25, Side::Left, 10, SumMode::Cesaro, quad),
      DomainError);
}

TEST_CASE("local series converges to the one-sided limits (sweep)") {
  const auto& f = cat().get("identity");
  double prev_l = 1e9, prev_r = 1e9;
  for (int N : {100, 1000}) {
    double rl = std::abs(local_series(f, 0.5, 0.25, Side::Left, N, SumMode::Cesaro, quad) -
                         Complex(0.5, 0.0));
    double rr = std::abs(local_series(f, 0.5, 0.25, Side::Right, N, SumMode::Cesaro, quad) -
                         Complex(0.5, 0.0));
    CHECK(rl < prev_l);
    CHECK(rr < prev_r);
    prev_l = rl;
    prev_r = rr;
  }
  CHECK(prev_l <= 1e-2);
  CHECK(prev_r <= 1e-2);
  // Two-sided window at a jump converges to the midpoint.
  Complex vb = local_series(cat().get("step_half"), 0.5, 0.25, Side::Both, 1000, SumMode::Cesaro,
                            quad);
  CHECK(std::abs(vb - Complex(0.5, 0.0)) <= 1e-2);
}
