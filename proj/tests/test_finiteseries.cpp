#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genfourier/finiteseries.hpp>
#include <genfourier/fourier.hpp>

#include <cmath>

using namespace genfourier;
using namespace genfourier::finiteseries;
using funcmodel::BreakSpec;
using funcmodel::builtin_catalog;
using funcmodel::Expr;
using funcmodel::FunctionCatalog;
using funcmodel::PiecewiseFn;
using funcmodel::SmoothPiece;

namespace {

const FunctionCatalog& cat() {
  static FunctionCatalog c = builtin_catalog();
  return c;
}

QuadratureConfig quad;

}  // namespace

TEST_CASE("worked coefficients: u(1-u) with q = 2") {
  // Exact values b_0 = 1/8, b_1 = -1/8 (antiderivative computation: the
  // sawtooth term contributes -1/24 on each half-cell, 1/6 - 1/24 = 1/8; the
  // step kernel times the increments +-1/4 gives -1/8).
  auto ff = finite_coeffs(cat().get("parabola"), 2, quad);
  CHECK(std::abs(ff.b[0] - Complex(0.125, 0.0)) < 1e-13);
  CHECK(std::abs(ff.b[1] - Complex(-0.125, 0.0)) < 1e-13);
  CHECK(ff.grid_values[0] == 0.0);
  CHECK(ff.grid_values[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(reconstruct(ff, 1) - Complex(0.25, 0.0)) < 1e-13);
  CHECK(std::abs(reconstruct(ff, 2) - Complex(0.0, 0.0)) < 1e-13);
  CHECK_THROWS_AS(reconstruct(ff, 0), ArgumentError);
  CHECK_THROWS_AS(reconstruct(ff, 3), ArgumentError);
}

TEST_CASE("constant function: b_0 = k, higher coefficients vanish") {
  for (int q : {1, 2, 5, 12}) {
    auto ff = finite_coeffs(cat().get("const_one"), q, quad);
    CHECK(std::abs(ff.b[0] - Complex(1.0, 0.0)) < 1e-13);
    for (int r = 1; r < q; ++r) CHECK(std::abs(ff.b[r]) == 0.0);
    for (int a = 1; a <= q; ++a) CHECK(std::abs(reconstruct(ff, a) - Complex(1.0, 0.0)) < 1e-13);
  }
}

TEST_CASE("q = 1: the single coefficient reconstructs f(1)") {
  auto ff = finite_coeffs(cat().get("cosine"), 1, quad);
  CHECK(std::abs(ff.b[0] - Complex(1.0, 0.0)) < 1e-11);
  CHECK(std::abs(reconstruct(ff, 1) - Complex(1.0, 0.0)) < 1e-11);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(finite_coeffs(cat().get("identity"), 2, quad), PreconditionError);  // f(0)!=f(1)
  CHECK_THROWS_AS(finite_coeffs(cat().get("identity10"), 2, quad), DomainError);
  // Discontinuous at a grid point: the step at 1/2 with q = 2.
  CHECK_THROWS_AS(finite_coeffs(cat().get("step_half"), 2, quad), PreconditionError);
  // ... but fine when the jump is off-grid.
  CHECK_THROWS_AS(finite_coeffs(cat().get("sawtooth"), 3, quad), PreconditionError);  // jump at 1
  CHECK_THROWS_AS(finite_coeffs(cat().get("parabola"), 0, quad), ArgumentError);
}

TEST_CASE("exact reconstruction across moduli and catalog members") {
  for (const char* name : {"parabola", "cosine", "vkink", "const_one"}) {
    const auto& f = cat().get(name);
    for (int q = 1; q <= 12; ++q) {
      auto rep = coefficient_independence_check(f, q, quad, 1e-10);
      CAPTURE(name); CAPTURE(q); CAPTURE(rep.max_residual);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("two-oracle agreement for the step-kernel coefficients") {
  for (const char* name : {"parabola", "cosine", "vkink"}) {
    const auto& f = cat().get(name);
    for (int q : {2, 3, 5, 8, 12}) {
      auto ff = finite_coeffs(f, q, quad);
      for (int r = 1; r < q; ++r) {
        Complex oracle = finite_coeff_quadrature(f, r, q, quad);
        CAPTURE(name); CAPTURE(q); CAPTURE(r);
        CHECK(std::abs(ff.b[r] - oracle) <= 1e-9);
      }
    }
  }
}

TEST_CASE("conjugate symmetry of the coefficients for real f") {
  for (int q : {3, 7, 12}) {
    auto ff = finite_coeffs(cat().get("vkink"), q, quad);
    for (int r = 1; r < q; ++r)
      CHECK(std::abs(ff.b[q - r] - std::conj(ff.b[r])) <= 1e-12);
  }
}

TEST_CASE("a jump strictly inside a grid cell is picked up by the increments") {
  // Indicator of (0.3, 0.7): f(0) = f(1) = 0, continuous at 1/2 and 1 for
  // q = 2; the increments over the cells carry the interior jumps.
  auto f = PiecewiseFn::build({SmoothPiece{0, 0.3, Expr::number(0), nullptr},
                               SmoothPiece{0.3, 0.7, Expr::number(1), nullptr},
                               SmoothPiece{0.7, 1, Expr::number(0), nullptr}},
                              {BreakSpec{0.3, 1.0, 0.0, 1.0}, BreakSpec{0.7, 0.0, 1.0, 0.0}},
                              true);
  for (int q : {1, 2, 5}) {
    auto rep = coefficient_independence_check(f, q, quad, 1e-10);
    CAPTURE(q); CAPTURE(rep.max_residual);
    CHECK(rep.pass);
  }
  // The quadrature oracle agrees on the atoms as well.
  auto ff = finite_coeffs(f, 2, quad);
  CHECK(std::abs(ff.b[1] - finite_coeff_quadrature(f, 1, 2, quad)) <= 1e-12);
}

TEST_CASE("nested moduli reconstruct the same rational point") {
  for (const char* name : {"parabola", "vkink"}) {
    const auto& f = cat().get(name);
    auto f2 = finite_coeffs(f, 2, quad);
    auto f4 = finite_coeffs(f, 4, quad);
    auto f12 = finite_coeffs(f, 12, quad);
    CHECK(std::abs(reconstruct(f2, 1) - reconstruct(f4, 2)) <= 1e-10);
    CHECK(std::abs(reconstruct(f2, 1) - reconstruct(f12, 6)) <= 1e-10);
    CHECK(std::abs(reconstruct(f4, 3) - reconstruct(f12, 9)) <= 1e-10);
  }
}
