#pragma once

#include <genfourier/funcmodel.hpp>
#include <genfourier/quadrature.hpp>
#include <genfourier/report.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace genfourier::verify {

using quadrature::QuadratureConfig;

/// Parameters of the identity suites.  Defaults reproduce the shipped
/// configuration; a config file may override any block (see README).
struct Theorem1Params {
  std::vector<std::string> functions{"identity", "square",   "parabola", "cosine",
                                     "sawtooth", "step_half", "vkink"};
  std::vector<std::string> both_functions{"parabola", "cosine", "sawtooth", "vkink", "const_one"};
  std::vector<double> points{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double tol = 1e-8;
  double additivity_tol = 1e-10;
  double cesaro_tol = 1e-2;
  int cesaro_order = 10000;
};

struct LemmasParams {
  std::vector<std::string> functions{"identity10", "square10", "cube10", "quartic10"};
  int random_intervals = 20;
  double lo = 0.0;
  double hi = 10.0;
  double tol = 1e-9;
};

struct Theorem2Params {
  std::vector<std::string> functions{"parabola", "cosine", "vkink", "const_one"};
  int qmax = 12;
  double tol = 1e-10;
  double oracle_tol = 1e-9;
};

struct Theorem3Params {
  int qmax = 8;
  std::vector<std::int64_t> m_values{100, 1000, 10000};
  int grid_points = 101;
  double tol = 1e-3;
};

struct VerifyConfig {
  funcmodel::FunctionCatalog catalog = funcmodel::builtin_catalog();
  QuadratureConfig quad;
  std::uint64_t seed = 12345;
  Theorem1Params theorem1;
  LemmasParams lemmas;
  Theorem2Params theorem2;
  Theorem3Params theorem3;
};

/// Reads a config file: catalog entries (merged over the builtin catalog)
/// plus optional `suite <name> ... end` parameter blocks.
VerifyConfig parse_config(std::istream& in);
VerifyConfig parse_config_text(const std::string& text);

report::RunReport run_lemmas_suite(const VerifyConfig& cfg);
report::RunReport run_theorem1_suite(const VerifyConfig& cfg);
report::RunReport run_theorem2_suite(const VerifyConfig& cfg);
report::RunReport run_theorem3_suite(const VerifyConfig& cfg);

/// Deterministic CSV emitters behind `sweep` and `table`.
std::string sweep_cesaro_csv(const VerifyConfig& cfg, const std::string& function, double x,
                             const std::vector<int>& orders);
std::string sweep_partial_csv(const VerifyConfig& cfg, const std::string& function, double x,
                              const std::vector<int>& orders);
std::string sweep_psi_series_csv(int q, int r, double u, const std::vector<std::int64_t>& ms);
std::string table_psi_rq_csv(int q, int r, int grid_points);

/// The deterministic non-integer interval sample used by the lemmas suite.
std::vector<std::pair<double, double>> random_intervals(std::uint64_t seed, int count, double lo,
                                                        double hi);

/// Midpoint value (f(x+) + f(x-))/2 with the periodic convention at the
/// domain endpoints.
double periodic_midpoint(const funcmodel::PiecewiseFn& f, double x);

}  // namespace genfourier::verify
