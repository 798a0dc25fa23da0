// Maximizes coherent information over channel inputs (a lower bound on the
// optimal guaranteed privacy) and sweeps noise-parameter families.
//
// The objective is not concave in general; multi-start ascent with a pinned
// maximally-mixed first start is the claim, not global optimality.

#ifndef QPRIV_OPTIMIZE_HPP
#define QPRIV_OPTIMIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qpriv/quantities.hpp"

namespace qpriv {

struct OptimizerConfig {
  int restarts = 8;
  int max_iters = 500;
  double step_init = 0.1;
  double tol_obj = 1e-7;
  std::uint64_t seed = 0;
};

struct RunRecord {
  int restart;
  double value;
};

struct OptimizerResult {
  DensityOperator best_input;
  double best_value;  // bits; equals coherent_information at best_input
  std::vector<RunRecord> trace_of_runs;
  bool converged;  // whether the winning run converged
};

struct SweepRecord {
  double param;
  double s_output;
  double s_exchange;
  double coherent_info;
  std::string input_policy;
};

struct PrivacyBoundResult {
  Ensemble ensemble;
  double delta_chi;
  bool converged;
};

// Multi-start gradient ascent over rho = A A^dagger / Tr(A A^dagger) with
// central finite-difference gradients on A's real coordinates.  The first
// restart starts from the maximally mixed state, the rest from random
// densities seeded by cfg.seed + restart index.
OptimizerResult maximize_coherent_information(const QuantumChannel& ch,
                                              const OptimizerConfig& cfg = {},
                                              const Tolerances& tol = {});

// One record per grid value, evaluated independently and deterministically.
// input_policy is "max-mixed" or "optimized".
std::vector<SweepRecord> sweep(const std::string& family,
                               const std::vector<double>& params,
                               const std::string& input_policy,
                               const OptimizerConfig& cfg = {},
                               const Tolerances& tol = {});

// Ascent over n_signals pure states (unnormalized complex vectors) and
// simplex weights (softmax reparameterization), maximizing
// chi^Q' - chi^E'.  The returned value is cross-checked against
// I^Q(average state) via the pure-input identity.
PrivacyBoundResult maximize_privacy_bound(const QuantumChannel& ch,
                                          int n_signals,
                                          const OptimizerConfig& cfg = {},
                                          const Tolerances& tol = {});

}  // namespace qpriv

#endif  // QPRIV_OPTIMIZE_HPP
