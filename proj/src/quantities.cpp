#include "qpriv/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qpriv {

namespace {

// chi = S(avg output) - sum_k p_k S(output_k) for any output map.
double holevo_quantity(
    const Ensemble& e,
    const std::function<DensityOperator(const DensityOperator&)>& out,
    const Tolerances& tol) {
  const DensityOperator avg_out = out(average_state(e, tol));
  double chi = von_neumann_entropy(avg_out.matrix(), tol);
  for (std::size_t k = 0; k < e.size(); ++k)
    chi -= e.probs()[k] * von_neumann_entropy(out(e.states()[k]).matrix(), tol);
  return chi;
}

}  // namespace

double entropy_exchange(const QuantumChannel& ch, const DensityOperator& rho,
                        const Tolerances& tol) {
  return von_neumann_entropy(complementary_apply(ch, rho, tol).matrix(), tol);
}

double coherent_information(const QuantumChannel& ch,
                            const DensityOperator& rho,
                            const Tolerances& tol) {
  const double s_output = von_neumann_entropy(apply(ch, rho, tol).matrix(), tol);
  return s_output - entropy_exchange(ch, rho, tol);
}

double holevo_output(const QuantumChannel& ch, const Ensemble& e,
                     const Tolerances& tol) {
  return holevo_quantity(
      e, [&](const DensityOperator& rho) { return apply(ch, rho, tol); }, tol);
}

double holevo_environment(const QuantumChannel& ch, const Ensemble& e,
                          const Tolerances& tol) {
  return holevo_quantity(
      e,
      [&](const DensityOperator& rho) {
        return complementary_apply(ch, rho, tol);
      },
      tol);
}

double holevo_eve_subsystem(const QuantumChannel& ch, const Ensemble& e,
                            int d_dim, const Tolerances& tol) {
  return holevo_quantity(
      e,
      [&](const DensityOperator& rho) {
        return complementary_apply_subsystem(ch, rho, d_dim, tol);
      },
      tol);
}

double privacy_bound(const QuantumChannel& ch, const Ensemble& e,
                     const Tolerances& tol) {
  return holevo_output(ch, e, tol) - holevo_environment(ch, e, tol);
}

bool is_pure_member(const DensityOperator& rho, const Tolerances& tol) {
  const EigenSystem eig = hermitian_eigensystem(rho.matrix(), tol);
  return eig.values.back() >= 1.0 - 1e-9;
}

double verify_identity(const QuantumChannel& ch, const Ensemble& e,
                       const Tolerances& tol) {
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!is_pure_member(e.states()[k], tol)) {
      std::ostringstream msg;
      msg << "ensemble member " << k << " is not pure";
      throw ValidationError(msg.str());
    }
  }
  const double lhs = coherent_information(ch, average_state(e, tol), tol);
  const double rhs = privacy_bound(ch, e, tol);
  return std::abs(lhs - rhs);
}

double accessible_information(const std::vector<double>& probs,
                              const std::vector<DensityOperator>& outputs,
                              const Povm& m) {
  if (probs.size() != outputs.size() || probs.empty())
    throw DimensionError("signal probabilities and outputs must match");
  std::vector<double> marginal(m.size(), 0.0);
  double conditional = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const std::vector<double> p_j = measurement_distribution(outputs[k], m);
    conditional += probs[k] * shannon_entropy(p_j);
    for (std::size_t j = 0; j < p_j.size(); ++j)
      marginal[j] += probs[k] * p_j[j];
  }
  return shannon_entropy(marginal) - conditional;
}

double accessible_information_output(const QuantumChannel& ch,
                                     const Ensemble& e, const Povm& m,
                                     const Tolerances& tol) {
  std::vector<DensityOperator> outputs;
  outputs.reserve(e.size());
  for (const auto& s : e.states()) outputs.push_back(apply(ch, s, tol));
  return accessible_information(e.probs(), outputs, m);
}

double accessible_information_environment(const QuantumChannel& ch,
                                          const Ensemble& e, const Povm& m,
                                          const Tolerances& tol) {
  std::vector<DensityOperator> outputs;
  outputs.reserve(e.size());
  for (const auto& s : e.states())
    outputs.push_back(complementary_apply(ch, s, tol));
  return accessible_information(e.probs(), outputs, m);
}

double accessible_information_subsystem(const QuantumChannel& ch,
                                        const Ensemble& e, const Povm& m,
                                        int d_dim, const Tolerances& tol) {
  std::vector<DensityOperator> outputs;
  outputs.reserve(e.size());
  for (const auto& s : e.states())
    outputs.push_back(complementary_apply_subsystem(ch, s, d_dim, tol));
  return accessible_information(e.probs(), outputs, m);
}

PrivacyEstimate privacy(const QuantumChannel& ch, const Ensemble& e,
                        const Povm& bob, const Povm& eve,
                        std::optional<int> eve_d_dim, const Tolerances& tol) {
  const double h_bob = accessible_information_output(ch, e, bob, tol);
  const double h_eve =
      eve_d_dim ? accessible_information_subsystem(ch, e, eve, *eve_d_dim, tol)
                : accessible_information_environment(ch, e, eve, tol);
  const double chi_e = holevo_environment(ch, e, tol);
  return PrivacyEstimate{h_bob, h_eve, h_bob - h_eve, h_bob - chi_e};
}

IdentityTrialSummary verify_identity_trials(
    int trials, int max_dim, std::uint64_t seed,
    const std::optional<QuantumChannel>& forced, const Tolerances& tol) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (max_dim < 2) throw DomainError("max_dim must be >= 2");
  const Rng base(seed);
  double max_residual = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = base.derive(static_cast<std::uint64_t>(t));
    double residual = 0.0;
    if (forced) {
      const Ensemble e = random_pure_ensemble(
          forced->dim_in(), rng.uniform_int(2, 4), rng, tol);
      residual = verify_identity(*forced, e, tol);
    } else {
      const int dim_in = rng.uniform_int(2, max_dim);
      const int dim_out = rng.uniform_int(2, max_dim);
      const int min_kraus = (dim_in + dim_out - 1) / dim_out;
      const int n_kraus =
          rng.uniform_int(min_kraus, std::min(5, dim_in * dim_out));
      const QuantumChannel ch = random_channel(dim_in, dim_out, n_kraus, rng, tol);
      const Ensemble e =
          random_pure_ensemble(dim_in, rng.uniform_int(2, 4), rng, tol);
      residual = verify_identity(ch, e, tol);
    }
    max_residual = std::max(max_residual, residual);
  }
  return IdentityTrialSummary{trials, max_residual, max_residual < 1e-8};
}

AnalysisReport analyze(const QuantumChannel& ch, const Ensemble& e,
                       const Tolerances& tol) {
  const DensityOperator avg = average_state(e, tol);
  const double s_output = von_neumann_entropy(apply(ch, avg, tol).matrix(), tol);
  const double s_exchange = entropy_exchange(ch, avg, tol);
  const double chi_q = holevo_output(ch, e, tol);
  const double chi_e = holevo_environment(ch, e, tol);

  AnalysisReport report;
  report.s_output = s_output;
  report.s_exchange = s_exchange;
  report.coherent_info = s_output - s_exchange;
  report.chi_q = chi_q;
  report.chi_e = chi_e;
  report.delta_chi = chi_q - chi_e;

  bool all_pure = true;
  for (const auto& s : e.states())
    if (!is_pure_member(s, tol)) {
      all_pure = false;
      break;
    }
  if (all_pure)
    report.identity_residual = std::abs(report.coherent_info - report.delta_chi);
  return report;
}

}  // namespace qpriv
