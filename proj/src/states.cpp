#include "qpriv/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace qpriv {

namespace {

void check_pure_invariants(const Matrix& v) {
  if (v.cols() != 1) throw DimensionError("pure state must be a column");
  if (!all_finite(v))
    throw ValidationError("pure state has non-finite entries");
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "pure state norm " << norm << " deviates from 1";
    throw ValidationError(msg.str());
  }
}

void check_density_invariants(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw DimensionError("density operator must be square");
  if (!all_finite(m))
    throw ValidationError("density operator has non-finite entries");
  if (!is_hermitian(m, tol.herm)) {
    std::ostringstream msg;
    msg << "density operator is not Hermitian: max |m - m^dagger| = "
        << max_abs(Matrix(m - m.adjoint()));
    throw ValidationError(msg.str());
  }
  const EigenSystem eig = hermitian_eigensystem(m, tol);
  if (eig.values.front() < -tol.psd) {
    std::ostringstream msg;
    msg << "density operator is not PSD: eigenvalue " << eig.values.front();
    throw ValidationError(msg.str());
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream msg;
    msg << "density operator trace " << tr << " deviates from 1";
    throw ValidationError(msg.str());
  }
}

}  // namespace

DensityOperator::DensityOperator(Matrix m, Dims dims, const Tolerances& tol)
    : matrix_(std::move(m)), dims_(std::move(dims)) {
  check_dims(dims_, static_cast<int>(matrix_.rows()));
  check_density_invariants(matrix_, tol);
}

DensityOperator::DensityOperator(Matrix m, const Tolerances& tol)
    : matrix_(std::move(m)), dims_{static_cast<int>(matrix_.rows())} {
  check_density_invariants(matrix_, tol);
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  return DensityOperator(Matrix::Identity(dim, dim) / double(dim));
}

PureState::PureState(Matrix column, Dims dims)
    : vector_(std::move(column)), dims_(std::move(dims)) {
  check_pure_invariants(vector_);
  check_dims(dims_, static_cast<int>(vector_.rows()));
}

PureState::PureState(Matrix column)
    : vector_(std::move(column)), dims_{static_cast<int>(vector_.rows())} {
  check_pure_invariants(vector_);
}

DensityOperator PureState::projector(const Tolerances& tol) const {
  return DensityOperator(vector_ * vector_.adjoint(), dims_, tol);
}

PureState PureState::basis(int index, int dim) {
  if (dim < 1 || index < 0 || index >= dim)
    throw DomainError("basis index out of range");
  Matrix v = Matrix::Zero(dim, 1);
  v(index, 0) = 1.0;
  return PureState(std::move(v));
}

Ensemble::Ensemble(std::vector<double> probs,
                   std::vector<DensityOperator> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size())
    throw ValidationError("ensemble needs matching non-empty lists");
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw ValidationError("ensemble probabilities must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "ensemble probabilities sum to " << total;
    throw ValidationError(msg.str());
  }
  const Dims& d0 = states_.front().dims();
  for (const auto& s : states_)
    if (s.dims() != d0)
      throw DimensionError("ensemble members live on different spaces");
}

Ensemble Ensemble::of_pure(std::vector<double> probs,
                           const std::vector<PureState>& states,
                           const Tolerances& tol) {
  std::vector<DensityOperator> members;
  members.reserve(states.size());
  for (const auto& s : states) members.push_back(s.projector(tol));
  return Ensemble(std::move(probs), std::move(members));
}

Povm::Povm(std::vector<Matrix> effects, const Tolerances& tol)
    : effects_(std::move(effects)) {
  if (effects_.empty()) throw ValidationError("POVM needs at least one effect");
  const Eigen::Index d = effects_.front().rows();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < effects_.size(); ++j) {
    const Matrix& e = effects_[j];
    if (e.rows() != d || e.cols() != d)
      throw DimensionError("POVM effects must share one square dimension");
    if (!is_hermitian(e, tol.herm)) {
      std::ostringstream msg;
      msg << "POVM effect " << j << " is not Hermitian";
      throw ValidationError(msg.str());
    }
    const EigenSystem eig = hermitian_eigensystem(e, tol);
    if (eig.values.front() < -tol.psd) {
      std::ostringstream msg;
      msg << "POVM effect " << j << " is not PSD: eigenvalue "
          << eig.values.front();
      throw ValidationError(msg.str());
    }
    sum += e;
  }
  const double completeness = max_abs(Matrix(sum - Matrix::Identity(d, d)));
  if (completeness > 1e-9) {
    std::ostringstream msg;
    msg << "POVM effects do not sum to identity: max deviation "
        << completeness;
    throw ValidationError(msg.str());
  }
}

Povm Povm::computational_basis(int dim) {
  return projective(Matrix::Identity(dim, dim));
}

Povm Povm::projective(const Matrix& unitary, const Tolerances& tol) {
  const Eigen::Index d = unitary.rows();
  if (unitary.cols() != d) throw DimensionError("expected a square unitary");
  std::vector<Matrix> effects;
  effects.reserve(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Matrix col = unitary.col(j);
    effects.push_back(col * col.adjoint());
  }
  return Povm(std::move(effects), tol);
}

DensityOperator average_state(const Ensemble& e, const Tolerances& tol) {
  Matrix avg = Matrix::Zero(e.dim(), e.dim());
  for (std::size_t k = 0; k < e.size(); ++k)
    avg += e.probs()[k] * e.states()[k].matrix();
  return DensityOperator(std::move(avg), e.states().front().dims(), tol);
}

PureState purify(const DensityOperator& rho, const Tolerances& tol) {
  EigenSystem eig = hermitian_eigensystem(rho.matrix(), tol);
  // Descending eigenvalues; keep the support only.
  std::vector<int> order(eig.values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return eig.values[a] > eig.values[b]; });
  std::vector<int> support;
  for (int i : order)
    if (eig.values[i] > tol.eig_floor) support.push_back(i);
  if (support.empty())
    throw NumericError("density operator has numerically empty support");

  const int rank = static_cast<int>(support.size());
  const int d = rho.dim();
  Matrix psi = Matrix::Zero(rank * d, 1);
  for (int r = 0; r < rank; ++r) {
    Matrix v = eig.vectors.col(support[r]);
    // Phase convention: first non-negligible component real positive.
    for (int j = 0; j < d; ++j) {
      const Complex z = v(j, 0);
      if (std::abs(z) > 1e-10) {
        v *= std::conj(z) / std::abs(z);
        break;
      }
    }
    psi.block(r * d, 0, d, 1) = std::sqrt(eig.values[support[r]]) * v;
  }
  psi /= psi.norm();
  return PureState(std::move(psi), Dims{rank, d});
}

std::vector<double> measurement_distribution(const DensityOperator& rho,
                                             const Povm& m) {
  if (rho.dim() != m.dim())
    throw DimensionError("POVM dimension does not match the state");
  std::vector<double> p(m.size());
  double total = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const double v = (m.effects()[j] * rho.matrix()).trace().real();
    p[j] = std::max(v, 0.0);
    total += p[j];
  }
  if (total <= 0.0) throw NumericError("measurement distribution vanished");
  for (double& v : p) v /= total;
  return p;
}

Ensemble eigendecomposition_ensemble(const DensityOperator& rho,
                                     const Tolerances& tol) {
  const EigenSystem eig = hermitian_eigensystem(rho.matrix(), tol);
  std::vector<double> probs;
  std::vector<DensityOperator> members;
  double total = 0.0;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] <= tol.eig_floor) continue;
    const Matrix v = eig.vectors.col(static_cast<Eigen::Index>(i));
    probs.push_back(eig.values[i]);
    members.emplace_back(v * v.adjoint(), rho.dims(), tol);
    total += eig.values[i];
  }
  for (double& p : probs) p /= total;
  return Ensemble(std::move(probs), std::move(members));
}

Ensemble random_pure_ensemble(int dim, int n_signals, Rng& rng,
                              const Tolerances& tol) {
  if (n_signals < 1) throw DomainError("ensemble needs at least one signal");
  std::vector<double> w(n_signals);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (double& x : w) x /= total;
  std::vector<PureState> states;
  states.reserve(n_signals);
  for (int k = 0; k < n_signals; ++k)
    states.emplace_back(random_pure_state(dim, rng));
  return Ensemble::of_pure(std::move(w), states, tol);
}

Povm random_povm(int dim, int n_effects, Rng& rng, const Tolerances& tol) {
  if (dim < 1 || n_effects < 1)
    throw DomainError("POVM needs positive dimension and effect count");
  std::vector<Matrix> raw(n_effects);
  Matrix sum = Matrix::Zero(dim, dim);
  for (auto& a : raw) {
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < g.size(); ++i)
      g.data()[i] = rng.complex_gaussian();
    a = g * g.adjoint();
    sum += a;
  }
  // Whiten by sum^{-1/2} so the effects close to the identity.
  const EigenSystem eig = hermitian_eigensystem(sum, tol);
  Matrix inv_sqrt = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (eig.values[i] <= tol.eig_floor)
      throw NumericError("random POVM normalizer is singular");
    const Matrix v = eig.vectors.col(i);
    inv_sqrt += (1.0 / std::sqrt(eig.values[i])) * (v * v.adjoint());
  }
  std::vector<Matrix> effects;
  effects.reserve(raw.size());
  for (const auto& a : raw) {
    Matrix e = inv_sqrt * a * inv_sqrt;
    effects.push_back(0.5 * (e + Matrix(e.adjoint())));
  }
  return Povm(std::move(effects), tol);
}

}  // namespace qpriv
