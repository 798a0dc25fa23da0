// Acceptance suite: exercises every acceptance criterion end to end and
// prints one PASS/FAIL line per criterion.  Exits non-zero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "qpriv/optimize.hpp"
#include "qpriv/serialize.hpp"

using namespace qpriv;
using namespace qpriv::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

QuantumChannel random_small_channel(Rng& rng, int max_dim = 3,
                                    int max_kraus = 5) {
  const int din = rng.uniform_int(2, max_dim);
  const int dout = rng.uniform_int(2, max_dim);
  const int nk = rng.uniform_int((din + dout - 1) / dout,
                                 std::min(max_kraus, din * dout));
  return random_channel(din, dout, nk, rng);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// 1. Pure-input identity I = chi_Q' - chi_E' over 200 random cases.
Outcome identity_suite() {
  const auto start = std::chrono::steady_clock::now();
  const IdentityTrialSummary summary = verify_identity_trials(200, 3, 20260808);
  std::ostringstream detail;
  detail << "max residual " << sci(summary.max_residual) << " < 1e-8 over 200 cases ("
         << sci(seconds_since(start)) << " s)";
  return {summary.pass, detail.str()};
}

// 2. delta chi depends only on the average input state.
Outcome ensemble_independence() {
  Rng rng(471);
  double worst = 0.0;
  double worst_avg_gap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = rng.uniform_int(2, 3);
    const DensityOperator rho(
        random_density(dim, rng.uniform_int(2, dim), rng));
    const int dout = rng.uniform_int(2, 3);
    const int nk = rng.uniform_int((dim + dout - 1) / dout,
                                   std::min(5, dim * dout));
    const QuantumChannel ch = random_channel(dim, dout, nk, rng);
    const Ensemble a = eigendecomposition_ensemble(rho);
    const Ensemble b = steered_ensemble(rho, rng);
    worst_avg_gap = std::max(
        worst_avg_gap,
        max_diff(average_state(a).matrix(), average_state(b).matrix()));
    worst = std::max(worst, std::abs(privacy_bound(ch, a) - privacy_bound(ch, b)));
  }
  std::ostringstream detail;
  detail << "max |dchi_1 - dchi_2| " << sci(worst)
         << " < 1e-8 over 50 shared-average pairs (avg gap "
         << sci(worst_avg_gap) << ")";
  return {worst < 1e-8 && worst_avg_gap < 1e-12, detail.str()};
}

// 3. Accessible information never beats chi on either side, and a
//    projective decoder saturates it on an orthogonal identity instance.
Outcome holevo_bound() {
  Rng rng(472);
  double worst_excess = -1.0;
  for (int setting = 0; setting < 20; ++setting) {
    const QuantumChannel ch = random_small_channel(rng);
    const Ensemble e =
        random_pure_ensemble(ch.dim_in(), rng.uniform_int(2, 4), rng);
    const double chi_q = holevo_output(ch, e);
    const double chi_e = holevo_environment(ch, e);
    for (int k = 0; k < 3; ++k) {
      const Povm bob = random_povm(ch.dim_out(), rng.uniform_int(2, 5), rng);
      const Povm eve = random_povm(ch.dim_env(), rng.uniform_int(2, 5), rng);
      worst_excess = std::max(
          worst_excess, accessible_information_output(ch, e, bob) - chi_q);
      worst_excess =
          std::max(worst_excess,
                   accessible_information_environment(ch, e, eve) - chi_e);
    }
  }
  const Ensemble orthogonal = Ensemble::of_pure(
      {0.5, 0.5}, {PureState::basis(0, 2), PureState::basis(1, 2)});
  const QuantumChannel id = identity_channel(2);
  const double achieved = accessible_information_output(
      id, orthogonal, Povm::computational_basis(2));
  const double chi = holevo_output(id, orthogonal);
  std::ostringstream detail;
  detail << "max (acc - chi) " << sci(worst_excess)
         << " <= 1e-9 over 120 POVMs; projective decoder reaches "
         << achieved / chi << " of chi";
  return {worst_excess <= 1e-9 && achieved >= 0.99 * chi, detail.str()};
}

// 4. chi_D' <= chi_E', with equality at full environment access.
Outcome subenvironment_monotonicity() {
  Rng rng(473);
  double worst_excess = -1.0;
  double worst_equality_gap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel ch = random_small_channel(rng);
    const Ensemble e =
        random_pure_ensemble(ch.dim_in(), rng.uniform_int(2, 4), rng);
    const double chi_e = holevo_environment(ch, e);
    const int d_dim = rng.uniform_int(1, ch.dim_env());
    worst_excess =
        std::max(worst_excess, holevo_eve_subsystem(ch, e, d_dim) - chi_e);
    worst_equality_gap = std::max(
        worst_equality_gap,
        std::abs(holevo_eve_subsystem(ch, e, ch.dim_env()) - chi_e));
  }
  std::ostringstream detail;
  detail << "max (chi_D - chi_E) " << sci(worst_excess)
         << " <= 1e-9; full-access gap " << sci(worst_equality_gap)
         << " < 1e-10 over 50 cases";
  return {worst_excess <= 1e-9 && worst_equality_gap < 1e-10, detail.str()};
}

// 5. Dephasing curve I(p) = 1 - h(p) at the maximally mixed input.
Outcome dephasing_curve() {
  double worst = 0.0;
  for (int i = 0; i <= 5; ++i) {
    const double p = i / 10.0;
    const double info = coherent_information(
        dephasing_channel(p), DensityOperator::maximally_mixed(2));
    worst = std::max(worst, std::abs(info - (1.0 - binary_entropy(p))));
  }
  std::ostringstream detail;
  detail << "max |I(p) - (1 - h(p))| " << sci(worst)
         << " < 1e-8 for p in {0, 0.1, ..., 0.5}";
  return {worst < 1e-8, detail.str()};
}

// 6. Erasure curve I(p) = 1 - 2p at the maximally mixed input.
Outcome erasure_curve() {
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const double info = coherent_information(
        erasure_channel(p), DensityOperator::maximally_mixed(2));
    worst = std::max(worst, std::abs(info - (1.0 - 2.0 * p)));
  }
  std::ostringstream detail;
  detail << "max |I(p) - (1 - 2p)| " << sci(worst)
         << " < 1e-8 for p in {0, 0.1, ..., 1.0}";
  return {worst < 1e-8, detail.str()};
}

// 7. Every quantity is invariant under Kraus-index remixing.
Outcome representation_freedom() {
  Rng rng(474);
  double worst_scalar = 0.0;
  double worst_choi = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const QuantumChannel ch = random_small_channel(rng);
    const QuantumChannel mixed =
        remix_kraus(ch, random_unitary(ch.dim_env(), rng));
    const DensityOperator rho(random_density(ch.dim_in(), ch.dim_in(), rng));
    const Ensemble e =
        random_pure_ensemble(ch.dim_in(), rng.uniform_int(2, 4), rng);
    worst_scalar = std::max(
        worst_scalar,
        std::abs(entropy_exchange(ch, rho) - entropy_exchange(mixed, rho)));
    worst_scalar = std::max(worst_scalar,
                            std::abs(coherent_information(ch, rho) -
                                     coherent_information(mixed, rho)));
    worst_scalar = std::max(
        worst_scalar, std::abs(holevo_output(ch, e) - holevo_output(mixed, e)));
    worst_scalar =
        std::max(worst_scalar, std::abs(holevo_environment(ch, e) -
                                        holevo_environment(mixed, e)));
    worst_choi =
        std::max(worst_choi, max_diff(choi_matrix(ch), choi_matrix(mixed)));
  }
  std::ostringstream detail;
  detail << "max quantity shift " << sci(worst_scalar)
         << " < 1e-8; max Choi shift " << sci(worst_choi)
         << " < 1e-10 over 50 remixes";
  return {worst_scalar < 1e-8 && worst_choi < 1e-10, detail.str()};
}

// 8. Kraus route and dilation route agree on both marginals.
Outcome dilation_consistency() {
  Rng rng(475);
  std::vector<QuantumChannel> channels = {
      identity_channel(2),  identity_channel(3),
      depolarizing_channel(0.3), dephasing_channel(0.45),
      amplitude_damping_channel(0.25), erasure_channel(0.15)};
  for (int trial = 0; trial < 50; ++trial)
    channels.push_back(random_small_channel(rng));
  double worst_output = 0.0;
  double worst_env = 0.0;
  for (const QuantumChannel& ch : channels) {
    const DensityOperator rho(random_density(ch.dim_in(), ch.dim_in(), rng));
    const StinespringIsometry v = stinespring(ch);
    const Matrix joint = v.matrix * rho.matrix() * v.matrix.adjoint();
    const Dims joint_dims{v.dim_out, v.dim_env};
    worst_output =
        std::max(worst_output, max_diff(partial_trace(joint, joint_dims, {0}),
                                        apply(ch, rho).matrix()));
    worst_env = std::max(worst_env,
                         max_diff(partial_trace(joint, joint_dims, {1}),
                                  environment_overlap_matrix(ch, rho)));
  }
  std::ostringstream detail;
  detail << "max ||apply - Tr_E|| " << sci(worst_output)
         << ", max ||overlap form - Tr_Q'|| " << sci(worst_env)
         << " < 1e-10 over zoo + 50 random channels";
  return {worst_output < 1e-10 && worst_env < 1e-10, detail.str()};
}

// 9. Optimizer hits the dephasing and identity optima at default config.
Outcome optimizer_targets() {
  const auto start = std::chrono::steady_clock::now();
  OptimizerConfig cfg;
  cfg.seed = 99;
  const OptimizerResult dephased =
      maximize_coherent_information(dephasing_channel(0.1), cfg);
  const double oracle = 1.0 - binary_entropy(0.1);
  const double value_err = std::abs(dephased.best_value - oracle);
  const double dist = trace_distance(dephased.best_input.matrix(),
                                     0.5 * Matrix::Identity(2, 2));
  const OptimizerResult ident =
      maximize_coherent_information(identity_channel(2), cfg);
  const double ident_err = std::abs(ident.best_value - 1.0);
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "dephasing(0.1): |best - " << oracle << "| = " << sci(value_err)
         << " < 1e-4, trace distance to I/2 " << sci(dist)
         << " < 1e-2; identity: err " << sci(ident_err) << " < 1e-4 ("
         << sci(elapsed) << " s)";
  return {value_err < 1e-4 && dist < 1e-2 && ident_err < 1e-4 && elapsed < 60.0,
          detail.str()};
}

// 10. The ensemble search and the input search bound the same quantity.
Outcome privacy_bound_consistency() {
  OptimizerConfig cfg;
  cfg.seed = 4242;
  double worst = 0.0;
  const std::vector<QuantumChannel> channels = {
      dephasing_channel(0.1), dephasing_channel(0.3),
      amplitude_damping_channel(0.2), amplitude_damping_channel(0.5)};
  for (const QuantumChannel& ch : channels) {
    const PrivacyBoundResult ensemble_route =
        maximize_privacy_bound(ch, 2, cfg);
    const OptimizerResult input_route = maximize_coherent_information(ch, cfg);
    worst = std::max(
        worst, std::abs(ensemble_route.delta_chi - input_route.best_value));
  }
  std::ostringstream detail;
  detail << "max |sup delta chi - sup I| " << sci(worst)
         << " < 2e-3 over dephasing {0.1, 0.3} and damping {0.2, 0.5}";
  return {worst < 2e-3, detail.str()};
}

// 11. CLI: identity suite passes, the sweep matches the closed form, and
//     fixed seeds give byte-identical output.
Outcome cli_contract() {
  const std::string verify_args =
      "verify-identity --trials 200 --max-dim 3 --seed 11";
  const CliResult verify_a = run_cli(verify_args);
  const CliResult verify_b = run_cli(verify_args);
  if (verify_a.exit_code != 0)
    return {false, "verify-identity exited " + std::to_string(verify_a.exit_code)};
  const Json verdict = Json::parse(verify_a.output);
  const bool verify_pass = verdict["pass"].get<bool>();

  const std::string sweep_args =
      "sweep --family dephasing --from 0 --to 0.5 --steps 6 "
      "--input-policy max-mixed --format csv";
  const CliResult sweep_a = run_cli(sweep_args);
  const CliResult sweep_b = run_cli(sweep_args);
  if (sweep_a.exit_code != 0)
    return {false, "sweep exited " + std::to_string(sweep_a.exit_code)};
  std::istringstream lines(sweep_a.output);
  std::string line;
  std::getline(lines, line);  // header
  double worst = 0.0;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> parts;
    while (std::getline(cells, cell, ',')) parts.push_back(cell);
    const double p = std::stod(parts[0]);
    const double info = std::stod(parts[3]);
    worst = std::max(worst, std::abs(info - (1.0 - binary_entropy(p))));
    ++rows;
  }
  const bool deterministic =
      verify_a.output == verify_b.output && sweep_a.output == sweep_b.output;
  std::ostringstream detail;
  detail << "verify-identity pass=" << (verify_pass ? "true" : "false")
         << "; sweep max |I - (1 - h(p))| " << sci(worst) << " < 1e-9 over "
         << rows << " rows; byte-identical reruns "
         << (deterministic ? "yes" : "NO");
  return {verify_pass && rows == 6 && worst < 1e-9 && deterministic,
          detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"pure-input-identity-suite", identity_suite},
      {"ensemble-independence", ensemble_independence},
      {"holevo-bound", holevo_bound},
      {"subenvironment-monotonicity", subenvironment_monotonicity},
      {"dephasing-curve", dephasing_curve},
      {"erasure-curve", erasure_curve},
      {"representation-freedom", representation_freedom},
      {"dilation-consistency", dilation_consistency},
      {"optimizer-targets", optimizer_targets},
      {"privacy-bound-consistency", privacy_bound_consistency},
      {"cli-contract", cli_contract},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %2zu %-28s %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str());
  }
  if (failures > 0)
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
  else
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
