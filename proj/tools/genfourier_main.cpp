// Command-line front end: `verify` runs the identity suites and writes a
// JSON report, `sweep` and `table` emit CSV data for external plotting.

#include <genfourier/report.hpp>
#include <genfourier/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace genfourier;

verify::VerifyConfig load_config(const std::string& path, double tol_override,
                                 long long seed_override) {
  verify::VerifyConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    cfg = verify::parse_config(in);
  }
  if (tol_override > 0) cfg.quad.abs_tol = tol_override;
  if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
  return cfg;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write to '" << path << "'\n";
    return false;
  }
  out << text;
  return out.good();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Fourier series verification tool"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::string out_path;
  double tol = -1.0;
  long long seed = -1;
  app.add_option("--config", config_path, "config file (catalog + suite parameters)");
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--tol", tol, "quadrature absolute tolerance override");
  app.add_option("--seed", seed, "seed for the randomized interval grids");

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite, write a JSON report");
  std::string suite = "all";
  verify_cmd->add_option("suite", suite, "theorem1|theorem2|theorem3|lemmas|all")
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "lemmas", "all"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "emit a CSV convergence sweep");
  std::string target = "cesaro";
  std::string sweep_fn = "sawtooth";
  double sweep_x = 0.3;
  std::string orders = "100,1000,10000";
  int sweep_q = 2, sweep_r = 1;
  double sweep_u = 0.3;
  sweep_cmd->add_option("target", target, "cesaro|partial|psi_series")
      ->check(CLI::IsMember({"cesaro", "partial", "psi_series"}));
  sweep_cmd->add_option("--function", sweep_fn, "catalog function (cesaro/partial)");
  sweep_cmd->add_option("--x", sweep_x, "evaluation point (cesaro/partial)");
  sweep_cmd->add_option("--orders", orders, "comma-separated N or M values");
  sweep_cmd->add_option("--q", sweep_q, "modulus (psi_series)");
  sweep_cmd->add_option("--r", sweep_r, "residue (psi_series)");
  sweep_cmd->add_option("--u", sweep_u, "evaluation point (psi_series)");

  auto* table_cmd = app.add_subcommand("table", "emit a kernel step table as CSV");
  std::string kernel = "psi_rq";
  int table_q = 2, table_r = 1, table_grid = 0;
  table_cmd->add_option("kernel", kernel, "psi_rq")->check(CLI::IsMember({"psi_rq"}));
  table_cmd->add_option("--q", table_q, "modulus");
  table_cmd->add_option("--r", table_r, "residue (r = q flags the sawtooth case)");
  table_cmd->add_option("--grid", table_grid, "number of sampled values to append");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) {
      auto cfg = load_config(config_path, tol, seed);
      std::vector<report::RunReport> reports;
      if (suite == "lemmas" || suite == "all") reports.push_back(verify::run_lemmas_suite(cfg));
      if (suite == "theorem1" || suite == "all")
        reports.push_back(verify::run_theorem1_suite(cfg));
      if (suite == "theorem2" || suite == "all")
        reports.push_back(verify::run_theorem2_suite(cfg));
      if (suite == "theorem3" || suite == "all")
        reports.push_back(verify::run_theorem3_suite(cfg));

      bool pass = true;
      for (const auto& r : reports) {
        std::cerr << report::to_console(r);
        pass = pass && r.aggregate_pass();
      }
      std::string json =
          reports.size() == 1 ? report::to_json(reports.front()) : report::to_json(reports);
      if (!write_output(out_path, json)) return 2;
      return pass ? 0 : 1;
    }

    if (*sweep_cmd) {
      auto cfg = load_config(config_path, tol, seed);
      std::string csv;
      if (target == "cesaro") {
        csv = verify::sweep_cesaro_csv(cfg, sweep_fn, sweep_x, parse_int_list(orders));
      } else if (target == "partial") {
        csv = verify::sweep_partial_csv(cfg, sweep_fn, sweep_x, parse_int_list(orders));
      } else {
        std::vector<std::int64_t> ms;
        for (int v : parse_int_list(orders)) ms.push_back(v);
        csv = verify::sweep_psi_series_csv(sweep_q, sweep_r, sweep_u, ms);
      }
      return write_output(out_path, csv) ? 0 : 2;
    }

    if (*table_cmd) {
      std::string csv = verify::table_psi_rq_csv(table_q, table_r, table_grid);
      return write_output(out_path, csv) ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
