#include <genfourier/verify.hpp>

#include <genfourier/finiteseries.hpp>
#include <genfourier/fourier.hpp>
#include <genfourier/kernels.hpp>
#include <genfourier/stieltjes.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace genfourier::verify {

using funcmodel::PiecewiseFn;
using report::CaseRecord;
using report::RunReport;
using Complex = std::complex<double>;

namespace {

// Runs one case body, recording residual-vs-tolerance and catching
// evaluation errors as failures.
void run_case(RunReport& rep, const std::string& name, const std::string& inputs, double tol,
              const std::function<std::pair<double, double>()>& body) {
  CaseRecord c;
  c.name = name;
  c.inputs = inputs;
  c.tolerance = tol;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [lhs, rhs] = body();
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = std::fabs(lhs - rhs);
    c.pass = c.residual <= tol;
  } catch (const std::exception& e) {
    c.inputs += std::string(c.inputs.empty() ? "" : "; ") + "error: " + e.what();
    c.pass = false;
    c.residual = std::numeric_limits<double>::infinity();
  }
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
  rep.cases.push_back(c);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Non-increasing within a small floor; exact zeros (symmetric evaluation
// points) pass.
bool decreasing_within_floor(const std::vector<double>& residuals, double floor_eps = 1e-9) {
  for (size_t i = 1; i < residuals.size(); ++i)
    if (residuals[i] > residuals[i - 1] + floor_eps) return false;
  return true;
}

}  // namespace

std::vector<std::pair<double, double>> random_intervals(std::uint64_t seed, int count, double lo,
                                                        double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<std::pair<double, double>> out;
  while (static_cast<int>(out.size()) < count) {
    double a = dist(rng), b = dist(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 0.25) continue;
    if (a == std::floor(a) || b == std::floor(b)) continue;
    out.emplace_back(a, b);
  }
  return out;
}

double periodic_midpoint(const PiecewiseFn& f, double x) {
  if (x > f.domain_lo() && x < f.domain_hi())
    return 0.5 * (f.left_limit(x) + f.right_limit(x));
  return 0.5 * (f.right_limit(f.domain_lo()) + f.left_limit(f.domain_hi()));
}

// ---------------------------------------------------------------------------
// lemmas
// ---------------------------------------------------------------------------

RunReport run_lemmas_suite(const VerifyConfig& cfg) {
  RunReport rep;
  rep.suite = "lemmas";
  const auto& cat = cfg.catalog;

  auto direct_sum = [](const PiecewiseFn& f, double a, double b) {
    double s = 0.0;
    for (double n = std::floor(a) + 1.0; n <= b; n += 1.0)
      if (n > a) s += f.eval(n);
    return s;
  };

  // Euler summation on the worked interval and on seeded random intervals.
  for (const auto& name : cfg.lemmas.functions) {
    const auto& f = cat.get(name);
    run_case(rep, "euler_sum", name + " on (0, 5.5]", cfg.lemmas.tol, [&] {
      return std::pair{stieltjes::euler_sum_rhs(f, 0.0, 5.5, cfg.quad), direct_sum(f, 0.0, 5.5)};
    });
  }
  auto intervals = random_intervals(cfg.seed, cfg.lemmas.random_intervals, cfg.lemmas.lo,
                                    cfg.lemmas.hi);
  for (const auto& name : cfg.lemmas.functions) {
    const auto& f = cat.get(name);
    run_case(rep, "euler_sum_random", name + ", " + std::to_string(intervals.size()) +
             " seeded intervals", cfg.lemmas.tol, [&] {
      double worst = 0.0;
      for (auto [a, b] : intervals)
        worst = std::max(worst, std::fabs(stieltjes::euler_sum_rhs(f, a, b, cfg.quad) -
                                          direct_sum(f, a, b)));
      return std::pair{worst, 0.0};
    });
  }

  // One-sided limits through the step integrator, with epsilon-independence.
  struct L2Case {
    const char* fn;
    double a;
    stieltjes::Side side;
  };
  for (const L2Case& lc : {L2Case{"step_half", 0.5, stieltjes::Side::Left},
                           L2Case{"step_half", 0.5, stieltjes::Side::Right},
                           L2Case{"square", 0.5, stieltjes::Side::Left},
                           L2Case{"sawtooth", 0.25, stieltjes::Side::Right}}) {
    const auto& f = cat.get(lc.fn);
    bool is_left = lc.side == stieltjes::Side::Left;
    double expected = is_left ? f.left_limit(lc.a) : f.right_limit(lc.a);
    std::string label = std::string(lc.fn) + " at " + fmt(lc.a) + (is_left ? " left" : " right");
    run_case(rep, "one_sided_limit", label, 1e-14, [&] {
      double delta = 0.2;
      double v = stieltjes::one_sided_via_stieltjes(f, lc.a, delta, delta, lc.side);
      return std::pair{v, expected};
    });
    run_case(rep, "one_sided_eps_independent", label, 1e-14, [&] {
      double delta = 0.2;
      double v1 = stieltjes::one_sided_via_stieltjes(f, lc.a, delta, delta, lc.side);
      double v2 = stieltjes::one_sided_via_stieltjes(f, lc.a, delta / 2, delta, lc.side);
      double v3 = stieltjes::one_sided_via_stieltjes(f, lc.a, delta / 10, delta, lc.side);
      return std::pair{std::max(std::fabs(v1 - v2), std::fabs(v1 - v3)), 0.0};
    });
  }

  // Integration by parts: both integrals evaluated independently must
  // complete the boundary product.
  struct PairCase {
    const char* f;
    const char* alpha;
  };
  for (const PairCase& pc : {PairCase{"identity", "square"}, PairCase{"square", "parabola"},
                             PairCase{"cosine", "square"}, PairCase{"vkink", "identity"},
                             PairCase{"square", "step_half"}}) {
    const auto& f = cat.get(pc.f);
    const auto& alpha = cat.get(pc.alpha);
    run_case(rep, "parts_identity", std::string(pc.f) + " against " + pc.alpha,
             1e-10, [&] {
      double f_da = alpha.is_step() ? stieltjes::rs_step_integrator(f, alpha, 0.0, 1.0)
                                    : stieltjes::rs_smooth(f, alpha, 0.0, 1.0, cfg.quad).value;
      double a_df = stieltjes::rs_smooth(alpha, f, 0.0, 1.0, cfg.quad).value;
      double boundary = f.eval(1.0) * alpha.eval(1.0) - f.eval(0.0) * alpha.eval(0.0);
      return std::pair{f_da + a_df, boundary};
    });
    run_case(rep, "parts_operation", std::string(pc.alpha) + " d" + pc.f, 1e-10, [&] {
      double via_parts = stieltjes::integrate_by_parts(f, alpha, 0.0, 1.0, cfg.quad);
      double direct = stieltjes::rs_smooth(alpha, f, 0.0, 1.0, cfg.quad).value;
      return std::pair{via_parts, direct};
    });
  }

  // Linearity of the smooth Stieltjes integral.
  run_case(rep, "rs_smooth_linearity", "identity + cosine against square", 1e-10, [&] {
    using funcmodel::Expr;
    using funcmodel::SmoothPiece;
    auto sum_expr = Expr::variable() +
                    Expr::unary(Expr::Kind::Cos, Expr::number(2 * std::numbers::pi) *
                                Expr::variable());
    auto g12 = PiecewiseFn::build({SmoothPiece{0, 1, sum_expr, nullptr}}, {}, true);
    const auto& f = cat.get("square");
    double combined = stieltjes::rs_smooth(g12, f, 0.0, 1.0, cfg.quad).value;
    double separate = stieltjes::rs_smooth(cat.get("identity"), f, 0.0, 1.0, cfg.quad).value +
                      stieltjes::rs_smooth(cat.get("cosine"), f, 0.0, 1.0, cfg.quad).value;
    return std::pair{combined, separate};
  });

  return rep;
}

// ---------------------------------------------------------------------------
// theorem1
// ---------------------------------------------------------------------------

RunReport run_theorem1_suite(const VerifyConfig& cfg) {
  RunReport rep;
  rep.suite = "theorem1";
  const auto& cat = cfg.catalog;
  const auto& p = cfg.theorem1;
  Interval iv(0.0, 1.0);

  for (const auto& name : p.functions) {
    const auto& f = cat.get(name);
    for (double a : p.points) {
      run_case(rep, "left_identity", name + " at a=" + fmt(a), p.tol, [&] {
        auto r = fourier::theorem1_left(f, iv, a, cfg.quad);
        return std::pair{r.lhs, r.rhs};
      });
      run_case(rep, "right_identity", name + " at a=" + fmt(a), p.tol, [&] {
        auto r = fourier::theorem1_right(f, iv, a, cfg.quad);
        return std::pair{r.lhs, r.rhs};
      });
    }
  }
  for (const auto& name : p.both_functions) {
    const auto& f = cat.get(name);
    for (double a : p.points) {
      run_case(rep, "both_identity", name + " at a=" + fmt(a), p.tol, [&] {
        auto r = fourier::theorem1_both(f, iv, a, cfg.quad);
        return std::pair{r.lhs, r.rhs};
      });
      run_case(rep, "both_additivity", name + " at a=" + fmt(a), p.additivity_tol, [&] {
        auto rl = fourier::theorem1_left(f, iv, a, cfg.quad);
        auto rr = fourier::theorem1_right(f, iv, a, cfg.quad);
        auto rb = fourier::theorem1_both(f, iv, a, cfg.quad);
        return std::pair{rb.rhs, rl.rhs + rr.rhs};
      });
    }
  }

  // (c,1) convergence of the series itself to the midpoint value.
  for (const auto& name : p.both_functions) {
    const auto& f = cat.get(name);
    run_case(rep, "cesaro_midpoint", name + " at x=0.3, N=" + std::to_string(p.cesaro_order),
             p.cesaro_tol, [&] {
      auto fc = fourier::exp_coeffs(f, iv, p.cesaro_order, cfg.quad);
      Complex v = fourier::cesaro_mean(fc, 0.3, p.cesaro_order, true);
      return std::pair{v.real(), periodic_midpoint(f, 0.3)};
    });
  }

  // Local half-window series at a jump-free point.
  run_case(rep, "local_series_left", "identity at a=0.5, delta=0.25", p.cesaro_tol, [&] {
    Complex v = fourier::local_series(cat.get("identity"), 0.5, 0.25, fourier::Side::Left,
                                      p.cesaro_order, fourier::SumMode::Cesaro, cfg.quad);
    return std::pair{v.real(), cat.get("identity").left_limit(0.5)};
  });
  run_case(rep, "local_series_right", "identity at a=0.5, delta=0.25", p.cesaro_tol, [&] {
    Complex v = fourier::local_series(cat.get("identity"), 0.5, 0.25, fourier::Side::Right,
                                      p.cesaro_order, fourier::SumMode::Cesaro, cfg.quad);
    return std::pair{v.real(), cat.get("identity").right_limit(0.5)};
  });
  run_case(rep, "local_series_both", "step_half at a=0.5, delta=0.25", p.cesaro_tol, [&] {
    Complex v = fourier::local_series(cat.get("step_half"), 0.5, 0.25, fourier::Side::Both,
                                      p.cesaro_order, fourier::SumMode::Cesaro, cfg.quad);
    return std::pair{v.real(), periodic_midpoint(cat.get("step_half"), 0.5)};
  });

  return rep;
}

// ---------------------------------------------------------------------------
// theorem2
// ---------------------------------------------------------------------------

RunReport run_theorem2_suite(const VerifyConfig& cfg) {
  RunReport rep;
  rep.suite = "theorem2";
  const auto& cat = cfg.catalog;
  const auto& p = cfg.theorem2;

  for (const auto& name : p.functions) {
    const auto& f = cat.get(name);
    run_case(rep, "reconstruction", name + ", q=1.." + std::to_string(p.qmax), p.tol, [&] {
      double worst = 0.0;
      for (int q = 1; q <= p.qmax; ++q) {
        auto ir = finiteseries::coefficient_independence_check(f, q, cfg.quad, p.tol);
        worst = std::max(worst, ir.max_residual);
      }
      return std::pair{worst, 0.0};
    });
    run_case(rep, "two_oracle_coeffs", name + ", q=2.." + std::to_string(p.qmax), p.oracle_tol,
             [&] {
      double worst = 0.0;
      for (int q = 2; q <= p.qmax; ++q) {
        auto ff = finiteseries::finite_coeffs(f, q, cfg.quad);
        for (int r = 1; r < q; ++r)
          worst = std::max(worst, std::abs(ff.b[static_cast<size_t>(r)] -
                                           finiteseries::finite_coeff_quadrature(f, r, q,
                                                                                 cfg.quad)));
      }
      return std::pair{worst, 0.0};
    });
    run_case(rep, "conjugate_symmetry", name + ", q=" + std::to_string(p.qmax), 1e-12, [&] {
      auto ff = finiteseries::finite_coeffs(f, p.qmax, cfg.quad);
      double worst = 0.0;
      for (int r = 1; r < p.qmax; ++r)
        worst = std::max(worst, std::abs(ff.b[static_cast<size_t>(p.qmax - r)] -
                                         std::conj(ff.b[static_cast<size_t>(r)])));
      return std::pair{worst, 0.0};
    });
  }

  // Worked coefficients: u(1-u) with q=2 gives b_0 = 1/8, b_1 = -1/8 and
  // reconstructs f(1/2) = 1/4.
  run_case(rep, "worked_coefficients", "parabola, q=2", 1e-12, [&] {
    auto ff = finiteseries::finite_coeffs(cat.get("parabola"), 2, cfg.quad);
    double worst = std::max(std::abs(ff.b[0] - Complex(0.125, 0.0)),
                            std::abs(ff.b[1] - Complex(-0.125, 0.0)));
    worst = std::max(worst, std::abs(finiteseries::reconstruct(ff, 1) - Complex(0.25, 0.0)));
    worst = std::max(worst, std::abs(finiteseries::reconstruct(ff, 2) - Complex(0.0, 0.0)));
    return std::pair{worst, 0.0};
  });

  // Same rational point under nested moduli: a/q = b/k.
  struct Nested {
    int a, q, b, k;
  };
  for (const Nested& n : {Nested{1, 2, 2, 4}, Nested{1, 3, 3, 9}, Nested{2, 3, 8, 12}}) {
    for (const auto& name : p.functions) {
      const auto& f = cat.get(name);
      std::ostringstream label;
      label << name << ": " << n.a << "/" << n.q << " vs " << n.b << "/" << n.k;
      run_case(rep, "nested_moduli", label.str(), p.tol, [&] {
        auto fq = finiteseries::finite_coeffs(f, n.q, cfg.quad);
        auto fk = finiteseries::finite_coeffs(f, n.k, cfg.quad);
        return std::pair{finiteseries::reconstruct(fq, n.a).real(),
                         finiteseries::reconstruct(fk, n.b).real()};
      });
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// theorem3
// ---------------------------------------------------------------------------

namespace {

// 101 points i/103 never collide with any grid l/q for q <= 100.
std::vector<double> offgrid_points(int count) {
  std::vector<double> out;
  for (int i = 1; i <= count; ++i) out.push_back(static_cast<double>(i) / 103.0);
  return out;
}

}  // namespace

RunReport run_theorem3_suite(const VerifyConfig& cfg) {
  RunReport rep;
  rep.suite = "theorem3";
  const auto& p = cfg.theorem3;
  auto grid = offgrid_points(p.grid_points);

  // Closed form against the symmetric truncation, decreasing in M.
  run_case(rep, "series_oracle", "q<=" + std::to_string(p.qmax) + ", M up to " +
           std::to_string(p.m_values.back()), p.tol, [&] {
    std::vector<double> worst_by_m(p.m_values.size(), 0.0);
    for (int q = 2; q <= p.qmax; ++q)
      for (int r = 1; r < q; ++r)
        for (double u : grid) {
          Complex closed = kernels::psi_rq_closed(u, r, q);
          for (size_t mi = 0; mi < p.m_values.size(); ++mi) {
            Complex s = kernels::psi_rq_series(u, r, q, p.m_values[mi]);
            worst_by_m[mi] = std::max(worst_by_m[mi], std::abs(closed - s));
          }
        }
    if (!decreasing_within_floor(worst_by_m))
      throw PreconditionError("series residual did not decrease with M");
    return std::pair{worst_by_m.back(), 0.0};
  });

  run_case(rep, "jump_midpoint_series", "q=2, r=1, u=1/2, M=100000", p.tol, [&] {
    Complex closed = kernels::psi_rq_closed(0.5, 1, 2);
    Complex series = kernels::psi_rq_series(0.5, 1, 2, 100000);
    return std::pair{std::abs(closed - series), 0.0};
  });

  run_case(rep, "residue_partition", "q<=12, off-grid points", 1e-12, [&] {
    double worst = 0.0;
    for (int q = 1; q <= 12; ++q)
      for (double u : grid) {
        Complex sum(0.0, 0.0);
        for (int r = 1; r <= q; ++r) sum += kernels::psi_rq_closed(u, r, q);
        worst = std::max(worst, std::abs(sum - Complex(kernels::psi(u), 0.0)));
      }
    return std::pair{worst, 0.0};
  });

  run_case(rep, "step_structure_bitwise", "q<=" + std::to_string(p.qmax), 0.0, [&] {
    for (int q = 2; q <= p.qmax; ++q)
      for (int r = 1; r < q; ++r)
        for (int l = 1; l <= q; ++l) {
          Complex first;
          for (int s = 1; s <= 5; ++s) {
            double u = (l - 1 + s / 6.0) / q;
            Complex v = kernels::psi_rq_closed(u, r, q);
            if (s == 1)
              first = v;
            else if (v != first)
              throw PreconditionError("step value not bitwise constant inside a cell");
          }
        }
    return std::pair{0.0, 0.0};
  });

  run_case(rep, "step_decrement", "q<=12", 1e-14, [&] {
    double worst = 0.0;
    for (int q = 2; q <= 12; ++q)
      for (int r = 1; r < q; ++r) {
        auto k = kernels::ApKernelClosedForm::make(r, q);
        for (int l = 2; l <= q; ++l) {
          Complex expect = -std::polar(1.0 / q, 2.0 * std::numbers::pi *
                                       static_cast<double>(((l - 1) * r) % q) / q);
          worst = std::max(worst, std::abs((k.step_values[static_cast<size_t>(l - 1)] -
                                            k.step_values[static_cast<size_t>(l - 2)]) - expect));
        }
      }
    return std::pair{worst, 0.0};
  });

  run_case(rep, "jump_values_are_midpoints", "q<=12", 1e-14, [&] {
    double worst = 0.0;
    for (int q = 2; q <= 12; ++q)
      for (int r = 1; r < q; ++r) {
        auto k = kernels::ApKernelClosedForm::make(r, q);
        for (int l = 0; l <= q; ++l) {
          Complex below = k.step_values[static_cast<size_t>((l == 0 ? q : l) - 1)];
          Complex above = k.step_values[static_cast<size_t>(l == q ? 0 : l)];
          Complex mid = 0.5 * (below + above);
          worst = std::max(worst, std::abs(k.jump_values[static_cast<size_t>(l)] - mid));
          double u = static_cast<double>(l) / q;
          if (l > 0)
            worst = std::max(worst,
                             std::abs(kernels::psi_rq_closed(u, r, q) -
                                      k.jump_values[static_cast<size_t>(l)]));
        }
      }
    return std::pair{worst, 0.0};
  });

  run_case(rep, "constant_cotangent_vs_series", "1<=r<q<=12, m<=1e6", 1e-6, [&] {
    double worst = 0.0;
    for (int q = 2; q <= 12; ++q)
      for (int r = 1; r < q; ++r)
        worst = std::max(worst,
                         std::abs(kernels::c_rq(r, q) - kernels::c_rq_series(r, q, 1000000)));
    return std::pair{worst, 0.0};
  });

  run_case(rep, "constant_spot_values", "c(1,2)=0, c(1,4)=i/8, c(3,4)=-i/8", 1e-12, [&] {
    double worst = std::abs(kernels::c_rq(1, 2));
    worst = std::max(worst, std::abs(kernels::c_rq(1, 4) - Complex(0.0, 0.125)));
    worst = std::max(worst, std::abs(kernels::c_rq(3, 4) - Complex(0.0, -0.125)));
    return std::pair{worst, 0.0};
  });

  run_case(rep, "conjugate_residues_real", "q<=12, off-grid points", 1e-14, [&] {
    double worst = 0.0;
    for (int q = 2; q <= 12; ++q)
      for (int r = 1; r < q; ++r)
        for (double u : grid) {
          Complex s = kernels::psi_rq_closed(u, r, q) + kernels::psi_rq_closed(u, q - r, q);
          worst = std::max(worst, std::fabs(s.imag()));
        }
    return std::pair{worst, 0.0};
  });

  return rep;
}

// ---------------------------------------------------------------------------
// sweeps and tables
// ---------------------------------------------------------------------------

std::string sweep_cesaro_csv(const VerifyConfig& cfg, const std::string& function, double x,
                             const std::vector<int>& orders) {
  const auto& f = cfg.catalog.get(function);
  Interval iv(f.domain_lo(), f.domain_hi());
  int maxN = *std::max_element(orders.begin(), orders.end());
  auto fc = fourier::exp_coeffs(f, iv, maxN, cfg.quad);
  double target = periodic_midpoint(f, x);
  report::CsvWriter csv({"N", "value_re", "value_im", "residual"});
  for (int n : orders) {
    Complex v = fourier::cesaro_mean(fc, x, n, true);
    csv.add_row({std::to_string(n), report::format_sci(v.real()), report::format_sci(v.imag()),
                 report::format_sci(std::abs(v - Complex(target, 0.0)))});
  }
  return csv.str();
}

std::string sweep_partial_csv(const VerifyConfig& cfg, const std::string& function, double x,
                              const std::vector<int>& orders) {
  const auto& f = cfg.catalog.get(function);
  Interval iv(f.domain_lo(), f.domain_hi());
  int maxN = *std::max_element(orders.begin(), orders.end());
  auto fc = fourier::exp_coeffs(f, iv, maxN, cfg.quad);
  double target = periodic_midpoint(f, x);
  report::CsvWriter csv({"N", "value_re", "value_im", "residual"});
  for (int n : orders) {
    Complex v = fourier::partial_sum(fc, x, n, true);
    csv.add_row({std::to_string(n), report::format_sci(v.real()), report::format_sci(v.imag()),
                 report::format_sci(std::abs(v - Complex(target, 0.0)))});
  }
  return csv.str();
}

std::string sweep_psi_series_csv(int q, int r, double u, const std::vector<std::int64_t>& ms) {
  Complex closed = kernels::psi_rq_closed(u, r, q);
  report::CsvWriter csv({"M", "value_re", "value_im", "residual"});
  for (std::int64_t m : ms) {
    Complex v = kernels::psi_rq_series(u, r, q, m);
    csv.add_row({std::to_string(m), report::format_sci(v.real()), report::format_sci(v.imag()),
                 report::format_sci(std::abs(v - closed))});
  }
  return csv.str();
}

std::string table_psi_rq_csv(int q, int r, int grid_points) {
  report::CsvWriter csv({"kind", "index", "u_lo", "u_hi", "value_re", "value_im"});
  if (r == q) {
    // The r = q subseries is the scaled sawtooth, not a step kernel.
    csv.add_row({"sawtooth", "", "", "", "", ""});
  } else {
    auto k = kernels::ApKernelClosedForm::make(r, q);
    csv.add_row({"constant", "", "", "", report::format_sci(k.c.real()),
                 report::format_sci(k.c.imag())});
    for (int l = 1; l <= q; ++l)
      csv.add_row({"step", std::to_string(l),
                   report::format_sci(static_cast<double>(l - 1) / q),
                   report::format_sci(static_cast<double>(l) / q),
                   report::format_sci(k.step_values[static_cast<size_t>(l - 1)].real()),
                   report::format_sci(k.step_values[static_cast<size_t>(l - 1)].imag())});
    for (int l = 0; l <= q; ++l)
      csv.add_row({"jump", std::to_string(l), report::format_sci(static_cast<double>(l) / q),
                   report::format_sci(static_cast<double>(l) / q),
                   report::format_sci(k.jump_values[static_cast<size_t>(l)].real()),
                   report::format_sci(k.jump_values[static_cast<size_t>(l)].imag())});
  }
  for (int i = 1; i <= grid_points; ++i) {
    double u = static_cast<double>(i) / (grid_points + 1);
    Complex v = kernels::psi_rq_closed(u, r, q);
    csv.add_row({"sample", std::to_string(i), report::format_sci(u), report::format_sci(u),
                 report::format_sci(v.real()), report::format_sci(v.imag())});
  }
  return csv.str();
}

// ---------------------------------------------------------------------------
// config parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

double to_num(const std::string& tok) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size()) throw ParseError("bad number '" + tok + "' in config");
  return v;
}

}  // namespace

VerifyConfig parse_config(std::istream& in) {
  // First pass: catalog entries (merged over the builtin set).
  std::stringstream buffer;
  buffer << in.rdbuf();
  VerifyConfig cfg;
  auto parsed = funcmodel::parse_catalog_text(buffer.str());
  for (const auto& [name, fn] : parsed.entries()) cfg.catalog.add(name, fn);

  // Second pass: suite parameter blocks.
  std::istringstream text(buffer.str());
  std::string line;
  std::string suite;
  int lineno = 0;
  auto fail = [&lineno](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  bool in_function = false;
  while (std::getline(text, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "function") {
      in_function = true;
      continue;
    }
    if (in_function) {
      if (toks[0] == "end") in_function = false;
      continue;
    }
    if (toks[0] == "suite") {
      if (toks.size() != 2) fail("'suite' needs a name");
      suite = toks[1];
      if (suite != "theorem1" && suite != "theorem2" && suite != "theorem3" && suite != "lemmas")
        fail("unknown suite '" + suite + "'");
      continue;
    }
    if (toks[0] == "end") {
      suite.clear();
      continue;
    }
    if (toks[0] == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_num(toks.at(1)));
      continue;
    }
    if (toks[0] == "quadtol") {
      cfg.quad.abs_tol = to_num(toks.at(1));
      continue;
    }
    if (suite.empty()) fail("parameter '" + toks[0] + "' outside a suite block");

    auto rest_strings = [&toks] {
      return std::vector<std::string>(toks.begin() + 1, toks.end());
    };
    auto rest_doubles = [&toks] {
      std::vector<double> out;
      for (size_t i = 1; i < toks.size(); ++i) out.push_back(to_num(toks[i]));
      return out;
    };

    if (suite == "theorem1") {
      auto& p = cfg.theorem1;
      if (toks[0] == "functions") p.functions = rest_strings();
      else if (toks[0] == "both") p.both_functions = rest_strings();
      else if (toks[0] == "points") p.points = rest_doubles();
      else if (toks[0] == "tol") p.tol = to_num(toks.at(1));
      else if (toks[0] == "addtol") p.additivity_tol = to_num(toks.at(1));
      else if (toks[0] == "cesarotol") p.cesaro_tol = to_num(toks.at(1));
      else if (toks[0] == "cesaroorder") p.cesaro_order = static_cast<int>(to_num(toks.at(1)));
      else fail("unknown theorem1 parameter '" + toks[0] + "'");
    } else if (suite == "lemmas") {
      auto& p = cfg.lemmas;
      if (toks[0] == "functions") p.functions = rest_strings();
      else if (toks[0] == "count") p.random_intervals = static_cast<int>(to_num(toks.at(1)));
      else if (toks[0] == "lo") p.lo = to_num(toks.at(1));
      else if (toks[0] == "hi") p.hi = to_num(toks.at(1));
      else if (toks[0] == "tol") p.tol = to_num(toks.at(1));
      else fail("unknown lemmas parameter '" + toks[0] + "'");
    } else if (suite == "theorem2") {
      auto& p = cfg.theorem2;
      if (toks[0] == "functions") p.functions = rest_strings();
      else if (toks[0] == "qmax") p.qmax = static_cast<int>(to_num(toks.at(1)));
      else if (toks[0] == "tol") p.tol = to_num(toks.at(1));
      else if (toks[0] == "oracletol") p.oracle_tol = to_num(toks.at(1));
      else fail("unknown theorem2 parameter '" + toks[0] + "'");
    } else if (suite == "theorem3") {
      auto& p = cfg.theorem3;
      if (toks[0] == "qmax") p.qmax = static_cast<int>(to_num(toks.at(1)));
      else if (toks[0] == "mvalues") {
        p.m_values.clear();
        for (size_t i = 1; i < toks.size(); ++i)
          p.m_values.push_back(static_cast<std::int64_t>(to_num(toks[i])));
      } else if (toks[0] == "gridpoints") p.grid_points = static_cast<int>(to_num(toks.at(1)));
      else if (toks[0] == "tol") p.tol = to_num(toks.at(1));
      else fail("unknown theorem3 parameter '" + toks[0] + "'");
    }
  }
  return cfg;
}

VerifyConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace genfourier::verify
