// Kinematic objects: density operators, pure states, signal ensembles,
// POVMs, and purification to a reference system.
//
// All values validate their invariants at construction; downstream code
// assumes validity.  Everything is immutable and safe to share.

#ifndef QPRIV_STATES_HPP
#define QPRIV_STATES_HPP

#include <vector>

#include "qpriv/qmath.hpp"

namespace qpriv {

// Hermitian, positive-semidefinite, unit-trace matrix on a tensor-factored
// Hilbert space.
class DensityOperator {
 public:
  DensityOperator(Matrix m, Dims dims, const Tolerances& tol = {});
  explicit DensityOperator(Matrix m, const Tolerances& tol = {});

  const Matrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  static DensityOperator maximally_mixed(int dim);

 private:
  Matrix matrix_;
  Dims dims_;
};

// Unit column vector.
class PureState {
 public:
  PureState(Matrix column, Dims dims);
  explicit PureState(Matrix column);

  const Matrix& vector() const { return vector_; }
  const Dims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(vector_.rows()); }

  DensityOperator projector(const Tolerances& tol = {}) const;

  // Computational basis vector |index>.
  static PureState basis(int index, int dim);

 private:
  Matrix vector_;
  Dims dims_;
};

// Alice's signal alphabet {p_k, rho_k}.  Members may be mixed; operations
// that require purity (the identity verifier) check per member.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityOperator> states);

  static Ensemble of_pure(std::vector<double> probs,
                          const std::vector<PureState>& states,
                          const Tolerances& tol = {});

  std::size_t size() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityOperator>& states() const { return states_; }
  int dim() const { return states_.front().dim(); }

 private:
  std::vector<double> probs_;
  std::vector<DensityOperator> states_;
};

// Positive effects summing to the identity; a decoding observable.
class Povm {
 public:
  explicit Povm(std::vector<Matrix> effects, const Tolerances& tol = {});

  std::size_t size() const { return effects_.size(); }
  const std::vector<Matrix>& effects() const { return effects_; }
  int dim() const { return static_cast<int>(effects_.front().rows()); }

  static Povm computational_basis(int dim);
  // Rank-1 projective measurement onto the columns of a unitary.
  static Povm projective(const Matrix& unitary, const Tolerances& tol = {});

 private:
  std::vector<Matrix> effects_;
};

DensityOperator average_state(const Ensemble& e, const Tolerances& tol = {});

// Canonical purification on R (x) Q with dim R = rank(rho): eigenvalues in
// descending order, each eigenvector's first non-negligible component made
// real positive, so the output is reproducible.
PureState purify(const DensityOperator& rho, const Tolerances& tol = {});

// Born-rule outcome distribution Tr(E_j rho); rounding negatives are
// clipped to zero and the vector renormalized.
std::vector<double> measurement_distribution(const DensityOperator& rho,
                                             const Povm& m);

// Spectral ensemble of rho: eigenprojectors weighted by eigenvalues.  Its
// average state reproduces rho.
Ensemble eigendecomposition_ensemble(const DensityOperator& rho,
                                     const Tolerances& tol = {});

// Random POVM with n_effects outcomes: normalized random PSD operators.
Povm random_povm(int dim, int n_effects, Rng& rng, const Tolerances& tol = {});

// Random pure signal states with uniform-simplex weights.
Ensemble random_pure_ensemble(int dim, int n_signals, Rng& rng,
                              const Tolerances& tol = {});

}  // namespace qpriv

#endif  // QPRIV_STATES_HPP
