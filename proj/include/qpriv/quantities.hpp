// Information quantities of a (channel, input) pair: entropy exchange,
// coherent information, Holevo bounds for the receiver and the
// eavesdropper, accessible information for explicit POVMs, privacy and its
// guaranteed floor, and the pure-ensemble identity verifier.
//
// All entropies are in bits.

#ifndef QPRIV_QUANTITIES_HPP
#define QPRIV_QUANTITIES_HPP

#include <optional>

#include "qpriv/channels.hpp"

namespace qpriv {

// Bundle of the scalar quantities for one (channel, ensemble) pair.
// identity_residual is populated only when every ensemble member is pure.
struct AnalysisReport {
  double s_output;        // S(rho^Q')
  double s_exchange;      // S_e
  double coherent_info;   // I^Q = s_output - s_exchange
  double chi_q;           // Holevo quantity at the receiver
  double chi_e;           // Holevo quantity in the environment
  double delta_chi;       // chi_q - chi_e
  std::optional<double> identity_residual;  // |I^Q - delta_chi|
};

// Single-use privacy for explicit decoding observables, and the floor that
// holds against every eavesdropper strategy.
struct PrivacyEstimate {
  double h_bob;
  double h_eve;
  double privacy;           // h_bob - h_eve
  double guaranteed_floor;  // h_bob - chi_e
};

// S_e = S(rho^E'): the entropy the initially pure environment acquires.
double entropy_exchange(const QuantumChannel& ch, const DensityOperator& rho,
                        const Tolerances& tol = {});

// I = S(E(rho)) - S_e.
double coherent_information(const QuantumChannel& ch,
                            const DensityOperator& rho,
                            const Tolerances& tol = {});

// chi^Q' = S(E(rho_avg)) - sum_k p_k S(E(rho_k)).
double holevo_output(const QuantumChannel& ch, const Ensemble& e,
                     const Tolerances& tol = {});

// chi^E': same with the complementary channel.
double holevo_environment(const QuantumChannel& ch, const Ensemble& e,
                          const Tolerances& tol = {});

// chi^D' for an eavesdropper confined to a d_dim-dimensional subsystem of
// the environment.  Never exceeds chi^E'.
double holevo_eve_subsystem(const QuantumChannel& ch, const Ensemble& e,
                            int d_dim, const Tolerances& tol = {});

// delta chi = chi^Q' - chi^E'; may be negative.
double privacy_bound(const QuantumChannel& ch, const Ensemble& e,
                     const Tolerances& tol = {});

// For pure-state ensembles, checks I^Q(average) = chi^Q' - chi^E' computed
// along independent paths and returns the residual.  Rejects ensembles with
// a mixed member, naming its index.
double verify_identity(const QuantumChannel& ch, const Ensemble& e,
                       const Tolerances& tol = {});

// Classical mutual information I(K;J) between the signal index and the
// measurement outcome, for explicit per-signal output states.
double accessible_information(const std::vector<double>& probs,
                              const std::vector<DensityOperator>& outputs,
                              const Povm& m);

// Bob measures the channel output.
double accessible_information_output(const QuantumChannel& ch,
                                     const Ensemble& e, const Povm& m,
                                     const Tolerances& tol = {});

// Eve measures the full environment.
double accessible_information_environment(const QuantumChannel& ch,
                                          const Ensemble& e, const Povm& m,
                                          const Tolerances& tol = {});

// Eve measures a d_dim-dimensional environment subsystem.
double accessible_information_subsystem(const QuantumChannel& ch,
                                        const Ensemble& e, const Povm& m,
                                        int d_dim, const Tolerances& tol = {});

// P = H_Bob - H_Eve for concrete decoding observables; the floor
// H_Bob - chi^E' is what survives any Eve strategy.  Pass eve_d_dim to
// confine Eve to an environment subsystem.
PrivacyEstimate privacy(const QuantumChannel& ch, const Ensemble& e,
                        const Povm& bob, const Povm& eve,
                        std::optional<int> eve_d_dim = std::nullopt,
                        const Tolerances& tol = {});

AnalysisReport analyze(const QuantumChannel& ch, const Ensemble& e,
                       const Tolerances& tol = {});

// Largest eigenvalue within 1e-9 of 1.
bool is_pure_member(const DensityOperator& rho, const Tolerances& tol = {});

struct IdentityTrialSummary {
  int trials;
  double max_residual;
  bool pass;  // max_residual < 1e-8
};

// Runs verify_identity over `trials` random (channel, pure ensemble) cases
// with dimensions in [2, max_dim], at most 5 Kraus operators and at most 4
// signals.  Pass `forced` to pin the channel and randomize only the
// ensembles.  Deterministic for a fixed seed.
IdentityTrialSummary verify_identity_trials(
    int trials, int max_dim, std::uint64_t seed,
    const std::optional<QuantumChannel>& forced = std::nullopt,
    const Tolerances& tol = {});

}  // namespace qpriv

#endif  // QPRIV_QUANTITIES_HPP
