#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genfourier/funcmodel.hpp>
#include <genfourier/kernels.hpp>
#include <genfourier/stieltjes.hpp>

#include <cmath>
#include <random>

using namespace genfourier;
using namespace genfourier::funcmodel;
using namespace genfourier::stieltjes;

namespace {

const FunctionCatalog& cat() {
  static FunctionCatalog c = builtin_catalog();
  return c;
}

QuadratureConfig quad;

// Step with jumps +1 at 0.25 and -2 at 0.75 (right-continuous values).
PiecewiseFn two_jump_step() {
  return PiecewiseFn::build({SmoothPiece{0, 0.25, Expr::number(0), nullptr},
                             SmoothPiece{0.25, 0.75, Expr::number(1), nullptr},
                             SmoothPiece{0.75, 1, Expr::number(-1), nullptr}},
                            {}, true);
}

}  // namespace

TEST_CASE("step integrator: weighted sums of point values") {
  // f(u)=u^2 against the unit step at 0.5: f(0.5) * 1.
  CHECK(rs_step_integrator(cat().get("square"), cat().get("step_half"), 0, 1) ==
        doctest::Approx(0.25).epsilon(1e-15));
  // f(u)=u against jumps +1 at 0.25 and -2 at 0.75.
  CHECK(rs_step_integrator(cat().get("identity"), two_jump_step(), 0, 1) ==
        doctest::Approx(0.25 - 1.5).epsilon(1e-15));
  // constant integrator: no jumps, zero.
  CHECK(rs_step_integrator(cat().get("square"), cat().get("const_one"), 0, 1) == 0.0);
}

TEST_CASE("step integrator argument and compatibility errors") {
  CHECK_THROWS_AS(rs_step_integrator(cat().get("square"), cat().get("identity"), 0, 1),
                  ArgumentError);
  // Both the integrand and the integrator jump from the left at 0.5.
  CHECK_THROWS_AS(rs_step_integrator(cat().get("step_half"), cat().get("step_half"), 0, 1),
                  IntegrabilityError);
}

TEST_CASE("rs_smooth: total increment, kernel window, single atom") {
  // g = 1, f = u^2: integral of 2u over [0,1] = f(1) - f(0) = 1.
  auto r1 = rs_smooth(cat().get("const_one"), cat().get("square"), 0, 1, quad);
  CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r1.atom_part == 0.0);
  CHECK(r1.value == r1.smooth_part + r1.atom_part);

  // g(u) = psi(u - 0.5), f = u on [0, 0.5]: the kernel equals u on (0, 0.5),
  // so the oracle is the closed-form antiderivative u^2/2 at 0.5 = 0.125.
  auto kernel = kernels::sawtooth_piecewise(-0.5, 0.5);  // psi(v) on v in [-0.5, 0.5]
  // Shift: build psi(u - 0.5) on [0, 0.5] directly.
  auto shifted = PiecewiseFn::build(
      {SmoothPiece{0, 0.5, parse_expression("u"), Expr::number(1)}}, {}, true);
  for (double u : {0.1, 0.3, 0.49})
    CHECK(shifted.eval(u) == doctest::Approx(kernels::psi(u - 0.5)).epsilon(1e-15));
  auto r2 = rs_smooth(shifted, cat().get("identity"), 0, 0.5, quad);
  CHECK(r2.value == doctest::Approx(0.125).epsilon(1e-13));

  // g(u) = u, f = unit step at 0.5: a single atom g(0.5) * 1.
  auto r3 = rs_smooth(cat().get("identity"), cat().get("step_half"), 0, 1, quad);
  CHECK(r3.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r3.smooth_part == 0.0);
}

TEST_CASE("rs_smooth errors") {
  auto no_deriv = PiecewiseFn::build({SmoothPiece{0, 1, parse_expression("u^2"), nullptr}});
  CHECK_THROWS_AS(rs_smooth(cat().get("const_one"), no_deriv, 0, 1, quad), IntegrabilityError);
  CHECK_THROWS_AS(rs_smooth(cat().get("step_half"), cat().get("step_half"), 0, 1, quad),
                  IntegrabilityError);
  CHECK_THROWS_AS(rs_smooth(cat().get("const_one"), cat().get("square"), 0, 2, quad),
                  DomainError);
}

TEST_CASE("integration by parts") {
  // f = u, alpha = u on [0,1]: 1 - 0 - 1/2.
  CHECK(integrate_by_parts(cat().get("identity"), cat().get("identity"), 0, 1, quad) ==
        doctest::Approx(0.5).epsilon(1e-13));
  // f = u^2, alpha = step at 0.5: 1 - 0 - 0.25; oracle = direct integral of
  // 2u over [0.5, 1] = 0.75.
  double direct = rs_smooth(cat().get("step_half"), cat().get("square"), 0, 1, quad).value;
  CHECK(direct == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(integrate_by_parts(cat().get("square"), cat().get("step_half"), 0, 1, quad) ==
        doctest::Approx(direct).epsilon(1e-12));
  // constant alpha: alpha * (f(b) - f(a)).
  CHECK(integrate_by_parts(cat().get("square"), cat().get("const_one"), 0, 1, quad) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Euler summation: worked cases against the direct-sum oracle") {
  auto direct_sum = [](const PiecewiseFn& f, double a, double b) {
    double s = 0.0;
    for (double n = std::floor(a) + 1.0; n <= b; n += 1.0)
      if (n > a) s += f.eval(n);
    return s;
  };
  // f = u on (0, 5.5]: 1+2+3+4+5 = 15.
  CHECK(direct_sum(cat().get("identity10"), 0, 5.5) == 15.0);
  CHECK(euler_sum_rhs(cat().get("identity10"), 0, 5.5, quad) ==
        doctest::Approx(15.0).epsilon(1e-13));
  // f = 1 on (0, 4]: the count of integers, 4.
  auto const_ten = PiecewiseFn::build({SmoothPiece{0, 10, Expr::number(1), nullptr}}, {}, true);
  CHECK(euler_sum_rhs(const_ten, 0, 4, quad) == doctest::Approx(4.0).epsilon(1e-13));
  // f = u^2 on (0.5, 3.5]: 1 + 4 + 9 = 14.
  CHECK(direct_sum(cat().get("square10"), 0.5, 3.5) == 14.0);
  CHECK(euler_sum_rhs(cat().get("square10"), 0.5, 3.5, quad) ==
        doctest::Approx(14.0).epsilon(1e-13));
}

TEST_CASE("Euler summation exactness for random degree<=4 intervals") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  const char* names[] = {"identity10", "square10", "cube10", "quartic10"};
  for (int k = 0; k < 20; ++k) {
    double a = dist(rng), b = dist(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 0.25 || a == std::floor(a) || b == std::floor(b)) {
      --k;
      continue;
    }
    for (const char* name : names) {
      const auto& f = cat().get(name);
      double s = 0.0;
      for (double n = std::floor(a) + 1.0; n <= b; n += 1.0)
        if (n > a) s += f.eval(n);
      CHECK(std::fabs(euler_sum_rhs(f, a, b, quad) - s) <= 1e-9);
    }
  }
}

TEST_CASE("Euler summation precondition: left continuity at interior integers") {
  // A function jumping from the left at u = 2.
  auto f = PiecewiseFn::build({SmoothPiece{0, 2, Expr::number(0), nullptr},
                               SmoothPiece{2, 4, Expr::number(1), nullptr}},
                              {BreakSpec{2.0, 1.0, 0.0, 1.0}}, true);
  CHECK_THROWS_AS(euler_sum_rhs(f, 0.5, 3.5, quad), PreconditionError);
  // The left-continuous variant is fine and matches the direct sum.
  auto g = PiecewiseFn::build({SmoothPiece{0, 2, Expr::number(0), nullptr},
                               SmoothPiece{2, 4, Expr::number(1), nullptr}},
                              {BreakSpec{2.0, 0.0, 0.0, 1.0}}, true);
  CHECK(euler_sum_rhs(g, 0.5, 3.5, quad) == doctest::Approx(1.0).epsilon(1e-13));  // g(1)+g(2)+g(3)
}

TEST_CASE("one-sided limits through the step integrator") {
  CHECK(one_sided_via_stieltjes(cat().get("step_half"), 0.5, 0.25, 0.25, Side::Left) == 0.0);
  CHECK(one_sided_via_stieltjes(cat().get("step_half"), 0.5, 0.25, 0.25, Side::Right) == 1.0);
  CHECK(one_sided_via_stieltjes(cat().get("square"), 0.5, 0.1, 0.2, Side::Left) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(one_sided_via_stieltjes(cat().get("square"), 0.5, 0.3, 0.2, Side::Left),
                  ArgumentError);
  // Identical across epsilon (the integrator has a single atom at a).
  for (double eps : {0.2, 0.1, 0.02}) {
    CHECK(one_sided_via_stieltjes(cat().get("sawtooth"), 0.25, eps, 0.2, Side::Right) ==
          doctest::Approx(-0.25).epsilon(1e-15));
  }
}

TEST_CASE("integration-by-parts consistency across catalog pairs (both routes defined)") {
  const char* names[] = {"identity", "square", "parabola", "cosine", "vkink"};
  for (const char* fa : names)
    for (const char* fb : names) {
      const auto& f = cat().get(fa);
      const auto& alpha = cat().get(fb);
      double f_da = rs_smooth(f, alpha, 0, 1, quad).value;
      double a_df = rs_smooth(alpha, f, 0, 1, quad).value;
      double boundary = f.eval(1.0) * alpha.eval(1.0) - f.eval(0.0) * alpha.eval(0.0);
      CHECK(std::fabs(f_da + a_df - boundary) <= 1e-10);
    }
}

TEST_CASE("compatibility predicate: same-side shared discontinuities") {
  const auto& step = cat().get("step_half");  // left-discontinuous at 1/2
  std::string why;
  CHECK_FALSE(rs_compatible(step, step, 0, 1, &why));
  CHECK(why.find("0.5") != std::string::npos);
  // A right-continuous integrand against the left-discontinuous step is fine.
  CHECK(rs_compatible(cat().get("square"), step, 0, 1));
  // Right-jumping indicator against the (right-continuous) step: compatible.
  auto right_jump = PiecewiseFn::build({SmoothPiece{0, 0.5, Expr::number(0), nullptr},
                                        SmoothPiece{0.5, 1, Expr::number(1), nullptr}},
                                       {BreakSpec{0.5, 0.0, 0.0, 1.0}}, true);
  CHECK(rs_compatible(step, right_jump, 0, 1));
  CHECK(rs_compatible(right_jump, step, 0, 1));
  // Two right-jumping steps collide.
  CHECK_FALSE(rs_compatible(right_jump, right_jump, 0, 1));
  // Atoms outside the integration range do not matter.
  CHECK(rs_compatible(step, step, 0.6, 1.0));
}

TEST_CASE("atoms carry the endpoint conventions") {
  const auto& step = cat().get("step_half");
  auto interior = atoms_of(step, 0, 1);
  REQUIRE(interior.size() == 1);
  CHECK(interior[0].delta_minus == 1.0);  // value 1 minus left limit 0
  CHECK(interior[0].delta_plus == 0.0);
  // With the range ending at the jump, only the left side counts.
  auto ending = atoms_of(step, 0, 0.5);
  REQUIRE(ending.size() == 1);
  CHECK(ending[0].total() == 1.0);
  // With the range starting at the jump, f(a+) - f(a) = 0.
  CHECK(atoms_of(step, 0.5, 1).empty());
}
