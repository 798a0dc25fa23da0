// qpriv: channel privacy analysis from the command line.
//
// Subcommands: validate, analyze, sweep, optimize, verify-identity.
// Payloads go to stdout (JSON, or CSV for sweeps), diagnostics to stderr.
// Exit codes: 0 success, 2 validation failure, 3 numeric failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qpriv/serialize.hpp"

namespace {

using namespace qpriv;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

int cmd_validate(const std::string& path) {
  const Json doc = load_json_file(path);
  const QuantumChannel ch = channel_from_json(doc);
  if (doc.contains("ensemble")) {
    const Ensemble e = ensemble_from_json(doc["ensemble"]);
    if (e.dim() != ch.dim_in())
      throw ValidationError("ensemble dimension does not match channel");
  }
  Json out;
  out["valid"] = true;
  out["dim_in"] = ch.dim_in();
  out["dim_out"] = ch.dim_out();
  out["n_kraus"] = ch.dim_env();
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_analyze(const std::string& path, const std::string& input_mode) {
  const Json doc = load_json_file(path);
  const QuantumChannel ch = channel_from_json(doc);
  if (input_mode == "max-mixed") {
    const DensityOperator rho = DensityOperator::maximally_mixed(ch.dim_in());
    const double s_output = von_neumann_entropy(apply(ch, rho).matrix());
    const double s_exchange = entropy_exchange(ch, rho);
    Json out;
    out["s_output"] = round12(s_output);
    out["s_exchange"] = round12(s_exchange);
    out["coherent_info"] = round12(s_output - s_exchange);
    std::cout << out.dump() << "\n";
    return 0;
  }
  if (input_mode != "ensemble")
    throw DomainError("unknown input mode: " + input_mode);
  if (!doc.contains("ensemble"))
    throw ValidationError("channel file has no \"ensemble\" section");
  const Ensemble e = ensemble_from_json(doc["ensemble"]);
  if (e.dim() != ch.dim_in())
    throw ValidationError("ensemble dimension does not match channel");
  std::cout << report_to_json(analyze(ch, e)).dump() << "\n";
  return 0;
}

int cmd_sweep(const std::string& family, double from, double to, int steps,
              const std::string& policy, const OptimizerConfig& cfg,
              const std::string& format) {
  if (steps < 1) throw DomainError("steps must be >= 1");
  if (from > to) throw DomainError("sweep range must have from <= to");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = steps == 1 ? from
                         : from + (to - from) * double(i) / double(steps - 1);
  const std::vector<SweepRecord> records = sweep(family, grid, policy, cfg);
  if (format == "csv")
    std::cout << sweep_to_csv(records);
  else if (format == "json")
    std::cout << sweep_to_json(records).dump() << "\n";
  else
    throw DomainError("unknown format: " + format);
  return 0;
}

int cmd_optimize(const std::optional<std::string>& path,
                 const std::optional<std::string>& family, double param,
                 int dim, const OptimizerConfig& cfg) {
  std::optional<QuantumChannel> ch;
  if (path) {
    ch = channel_from_json(load_json_file(*path));
  } else if (family) {
    ch = make_zoo_channel(*family, param, dim);
  } else {
    throw DomainError("optimize needs a channel file or --family");
  }
  const OptimizerResult result = maximize_coherent_information(*ch, cfg);
  std::cout << optimizer_result_to_json(result).dump() << "\n";
  return 0;
}

int cmd_verify_identity(int trials, int max_dim, std::uint64_t seed,
                        const std::optional<std::string>& family, double param,
                        int dim) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (max_dim < 2 || max_dim > 4)
    throw DomainError("max-dim must be 2, 3, or 4");
  std::optional<QuantumChannel> forced;
  if (family) forced = make_zoo_channel(*family, param, dim);
  const IdentityTrialSummary summary =
      verify_identity_trials(trials, max_dim, seed, forced);
  Json out;
  out["trials"] = summary.trials;
  out["max_residual"] = round12(summary.max_residual);
  out["pass"] = summary.pass;
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent-information and privacy-bound analysis of quantum channels"};
  app.require_subcommand(1);

  std::string path;
  std::string input_mode = "ensemble";
  std::string family, policy = "max-mixed", format = "csv";
  std::optional<std::string> opt_path, opt_family;
  double from = 0.0, to = 1.0, param = 0.0;
  int steps = 11, trials = 200, max_dim = 3, dim = 2;
  OptimizerConfig cfg;

  auto* validate = app.add_subcommand("validate", "Check a channel file");
  validate->add_option("path", path, "channel JSON file")->required();

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Report the information quantities");
  analyze_cmd->add_option("path", path, "channel JSON file")->required();
  analyze_cmd->add_option("--input", input_mode,
                          "\"ensemble\" (default) or \"max-mixed\"");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Sweep a zoo family over a parameter grid");
  sweep_cmd->add_option("--family", family, "channel family")->required();
  sweep_cmd->add_option("--from", from, "first parameter value")->required();
  sweep_cmd->add_option("--to", to, "last parameter value")->required();
  sweep_cmd->add_option("--steps", steps, "grid size (endpoints inclusive)")
      ->required();
  sweep_cmd->add_option("--input-policy", policy, "max-mixed | optimized");
  sweep_cmd->add_option("--seed", cfg.seed, "optimizer seed");
  sweep_cmd->add_option("--format", format, "csv | json");

  auto* optimize_cmd = app.add_subcommand(
      "optimize", "Maximize coherent information over inputs");
  optimize_cmd->add_option_function<std::string>(
      "path", [&](const std::string& p) { opt_path = p; },
      "channel JSON file");
  optimize_cmd->add_option_function<std::string>(
      "--family", [&](const std::string& f) { opt_family = f; },
      "zoo family instead of a file");
  optimize_cmd->add_option("--param", param, "family parameter");
  optimize_cmd->add_option("--dim", dim, "dimension (identity family)");
  optimize_cmd->add_option("--restarts", cfg.restarts, "number of restarts");
  optimize_cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
  optimize_cmd->add_option("--step-init", cfg.step_init, "initial step");
  optimize_cmd->add_option("--tol-obj", cfg.tol_obj, "convergence threshold");
  optimize_cmd->add_option("--seed", cfg.seed, "restart seed");

  auto* verify_cmd = app.add_subcommand(
      "verify-identity",
      "Check I = chi_Q - chi_E on random channels and pure ensembles");
  verify_cmd->add_option("--trials", trials, "number of random cases");
  verify_cmd->add_option("--max-dim", max_dim, "largest dimension (2..4)");
  verify_cmd->add_option("--seed", cfg.seed, "case seed");
  verify_cmd->add_option_function<std::string>(
      "--family", [&](const std::string& f) { opt_family = f; },
      "force one zoo channel instead of random ones");
  verify_cmd->add_option("--param", param, "family parameter");
  verify_cmd->add_option("--dim", dim, "dimension (identity family)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (analyze_cmd->parsed()) return cmd_analyze(path, input_mode);
    if (sweep_cmd->parsed())
      return cmd_sweep(family, from, to, steps, policy, cfg, format);
    if (optimize_cmd->parsed())
      return cmd_optimize(opt_path, opt_family, param, dim, cfg);
    if (verify_cmd->parsed())
      return cmd_verify_identity(trials, max_dim, cfg.seed, opt_family, param,
                                 dim);
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
