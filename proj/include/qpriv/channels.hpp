// Quantum channels in Kraus form, their Stinespring dilation, the
// complementary (environment) channel an eavesdropper sees, environment
// bipartitions, and a zoo of standard noise channels.

#ifndef QPRIV_CHANNELS_HPP
#define QPRIV_CHANNELS_HPP

#include <string>
#include <vector>

#include "qpriv/states.hpp"

namespace qpriv {

// Completely positive trace-preserving map, held as a Kraus-operator list.
// Validation is eager: trace preservation, complete positivity (Choi
// spectrum) and operator-count bounds are checked here, so every downstream
// operation may assume a valid channel.  Kraus operators whose max-norm is
// below 1e-12 are trimmed to keep the environment dimension minimal.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<Matrix> kraus, std::string name = "",
                          const Tolerances& tol = {});

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  // Environment dimension of the canonical dilation = Kraus count.
  int dim_env() const { return static_cast<int>(kraus_.size()); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<Matrix> kraus_;
  int dim_in_;
  int dim_out_;
  std::string name_;
};

// V = sum_k K_k (x) |k>_E, mapping the input into Q' (x) E.  Isometric:
// V^dagger V = I on the input space.
struct StinespringIsometry {
  Matrix matrix;  // (dim_out * dim_env) x dim_in
  int dim_out;
  int dim_env;
};

// Bipartition of the (zero-padded) environment as D (x) rest.
struct EnvironmentSplit {
  int d_dim;
  int rest_dim;
  int padded_dim;  // smallest multiple of d_dim >= dim_env
};

// rho' = sum_k K_k rho K_k^dagger, symmetrized.
DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho,
                      const Tolerances& tol = {});

StinespringIsometry stinespring(const QuantumChannel& ch);

// V rho V^dagger on Q' (x) E.  Pure inputs give rank-1 outputs.
DensityOperator joint_output(const QuantumChannel& ch,
                             const DensityOperator& rho,
                             const Tolerances& tol = {});

// The environment's output state Tr_{Q'}(V rho V^dagger) -- what a maximal
// eavesdropper holds after the interaction.
DensityOperator complementary_apply(const QuantumChannel& ch,
                                    const DensityOperator& rho,
                                    const Tolerances& tol = {});

// Closed form for the same state in the canonical environment basis:
// W[j,k] = Tr(K_j rho K_k^dagger).  Kept as an independent cross-check of
// the dilation route.
Matrix environment_overlap_matrix(const QuantumChannel& ch,
                                  const DensityOperator& rho);

// Zero-pads the environment to a multiple of d_dim and factors it as
// D (x) rest.  Padding adds exactly-zero Kraus operators and changes no
// computed state.
EnvironmentSplit split_environment(const QuantumChannel& ch, int d_dim);

// Environment output reduced to the subsystem D of dimension d_dim.
DensityOperator complementary_apply_subsystem(const QuantumChannel& ch,
                                              const DensityOperator& rho,
                                              int d_dim,
                                              const Tolerances& tol = {});

// (I (x) E)(|Omega><Omega|) with |Omega> = sum_i |i>|i> unnormalized;
// PSD iff the map is completely positive, trace = dim_in.
Matrix choi_matrix(const QuantumChannel& ch);

// K'_j = sum_k u[j,k] K_k.  Same superoperator, different Kraus list; used
// to probe representation independence.
QuantumChannel remix_kraus(const QuantumChannel& ch, const Matrix& u,
                           const Tolerances& tol = {});

// --- channel zoo ---------------------------------------------------------

QuantumChannel identity_channel(int dim);
// Qubit depolarizing: {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}.
QuantumChannel depolarizing_channel(double p);
// {sqrt(1-p) I, sqrt(p) Z}.
QuantumChannel dephasing_channel(double p);
// {[[1,0],[0,sqrt(1-g)]], [[0,sqrt(g)],[0,0]]}.
QuantumChannel amplitude_damping_channel(double gamma);
// Qubit -> qutrit with an orthogonal flag state |e> reached w.p. p.
QuantumChannel erasure_channel(double p);

// Families by name: identity, depolarizing, dephasing, amplitude-damping,
// erasure.  `dim` only applies to identity.
QuantumChannel make_zoo_channel(const std::string& family, double param,
                                int dim = 2);

// Random CPTP channel from a Haar-random isometry cut into n_kraus blocks.
// Requires dim_out * n_kraus >= dim_in.
QuantumChannel random_channel(int dim_in, int dim_out, int n_kraus, Rng& rng,
                              const Tolerances& tol = {});

}  // namespace qpriv

#endif  // QPRIV_CHANNELS_HPP
