#include "qpriv/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qpriv {

namespace {

constexpr double kTrimThreshold = 1e-12;
constexpr double kTracePreservingTol = 1e-9;

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

void check_unit_interval(double p, const char* what) {
  if (p < 0.0 || p > 1.0) {
    std::ostringstream msg;
    msg << what << " parameter " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<Matrix> kraus, std::string name,
                               const Tolerances& tol)
    : name_(std::move(name)) {
  if (kraus.empty())
    throw ValidationError("channel needs at least one Kraus operator");
  const Eigen::Index rows = kraus.front().rows();
  const Eigen::Index cols = kraus.front().cols();
  if (rows < 1 || cols < 1)
    throw DimensionError("Kraus operators must be non-empty");
  for (const auto& k : kraus) {
    if (k.rows() != rows || k.cols() != cols)
      throw DimensionError("Kraus operators must share one shape");
    if (!all_finite(k))
      throw ValidationError("Kraus operator has non-finite entries");
  }
  dim_in_ = static_cast<int>(cols);
  dim_out_ = static_cast<int>(rows);
  if (static_cast<long long>(dim_in_) * dim_out_ > kMaxTotalDim)
    throw DimensionError("channel dimensions exceed cap");

  for (auto& k : kraus)
    if (max_abs(k) >= kTrimThreshold) kraus_.push_back(std::move(k));
  if (kraus_.empty())
    throw ValidationError("not a channel: every Kraus operator is zero");
  if (static_cast<long long>(kraus_.size()) >
      static_cast<long long>(dim_in_) * dim_out_) {
    std::ostringstream msg;
    msg << "Kraus count " << kraus_.size() << " exceeds dim_in*dim_out = "
        << dim_in_ * dim_out_;
    throw ValidationError(msg.str());
  }
  if (static_cast<long long>(dim_out_) * kraus_.size() > kMaxTotalDim)
    throw DimensionError("dilation dimension exceeds cap");

  Matrix sum = Matrix::Zero(dim_in_, dim_in_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  const double tp_residual =
      max_abs(Matrix(sum - Matrix::Identity(dim_in_, dim_in_)));
  if (tp_residual > kTracePreservingTol) {
    std::ostringstream msg;
    msg << "not a channel: ||sum K^dagger K - I||_max = " << tp_residual;
    throw ValidationError(msg.str());
  }

  const EigenSystem choi = hermitian_eigensystem(choi_matrix(*this), tol);
  if (choi.values.front() < -tol.psd) {
    std::ostringstream msg;
    msg << "not completely positive: Choi eigenvalue " << choi.values.front();
    throw ValidationError(msg.str());
  }
}

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho,
                      const Tolerances& tol) {
  if (rho.dim() != ch.dim_in())
    throw DimensionError("input state does not match channel dim_in");
  Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
  for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  out = 0.5 * (out + Matrix(out.adjoint()));
  return DensityOperator(std::move(out), Dims{ch.dim_out()}, tol);
}

StinespringIsometry stinespring(const QuantumChannel& ch) {
  const int env = ch.dim_env();
  Matrix v = Matrix::Zero(ch.dim_out() * env, ch.dim_in());
  for (int k = 0; k < env; ++k) {
    Matrix basis = Matrix::Zero(env, 1);
    basis(k, 0) = 1.0;
    v += tensor_product(ch.kraus()[k], basis);
  }
  const double residual = max_abs(
      Matrix(v.adjoint() * v - Matrix::Identity(ch.dim_in(), ch.dim_in())));
  if (residual > kTracePreservingTol)
    throw NumericError("Stinespring isometry lost isometricity");
  return StinespringIsometry{std::move(v), ch.dim_out(), env};
}

DensityOperator joint_output(const QuantumChannel& ch,
                             const DensityOperator& rho,
                             const Tolerances& tol) {
  if (rho.dim() != ch.dim_in())
    throw DimensionError("input state does not match channel dim_in");
  const StinespringIsometry v = stinespring(ch);
  Matrix joint = v.matrix * rho.matrix() * v.matrix.adjoint();
  joint = 0.5 * (joint + Matrix(joint.adjoint()));
  return DensityOperator(std::move(joint), Dims{v.dim_out, v.dim_env}, tol);
}

DensityOperator complementary_apply(const QuantumChannel& ch,
                                    const DensityOperator& rho,
                                    const Tolerances& tol) {
  const DensityOperator joint = joint_output(ch, rho, tol);
  Matrix env = partial_trace(joint.matrix(), joint.dims(), {1});
  return DensityOperator(std::move(env), Dims{ch.dim_env()}, tol);
}

Matrix environment_overlap_matrix(const QuantumChannel& ch,
                                  const DensityOperator& rho) {
  if (rho.dim() != ch.dim_in())
    throw DimensionError("input state does not match channel dim_in");
  const int env = ch.dim_env();
  Matrix w(env, env);
  for (int j = 0; j < env; ++j)
    for (int k = 0; k < env; ++k)
      w(j, k) =
          (ch.kraus()[j] * rho.matrix() * ch.kraus()[k].adjoint()).trace();
  return w;
}

EnvironmentSplit split_environment(const QuantumChannel& ch, int d_dim) {
  if (d_dim < 1) throw DomainError("subsystem dimension must be positive");
  const int env = ch.dim_env();
  const int padded = d_dim * ((env + d_dim - 1) / d_dim);
  if (padded > kMaxTotalDim) {
    std::ostringstream msg;
    msg << "subsystem dimension " << d_dim << " pads the environment to "
        << padded << ", beyond the cap " << kMaxTotalDim;
    throw DomainError(msg.str());
  }
  return EnvironmentSplit{d_dim, padded / d_dim, padded};
}

DensityOperator complementary_apply_subsystem(const QuantumChannel& ch,
                                              const DensityOperator& rho,
                                              int d_dim,
                                              const Tolerances& tol) {
  const EnvironmentSplit split = split_environment(ch, d_dim);
  const DensityOperator env = complementary_apply(ch, rho, tol);
  // Embed into the padded environment; the extra basis states correspond to
  // all-zero Kraus operators and carry no weight.
  Matrix padded = Matrix::Zero(split.padded_dim, split.padded_dim);
  padded.block(0, 0, env.dim(), env.dim()) = env.matrix();
  Matrix d_part =
      partial_trace(padded, Dims{split.d_dim, split.rest_dim}, {0});
  return DensityOperator(std::move(d_part), Dims{split.d_dim}, tol);
}

Matrix choi_matrix(const QuantumChannel& ch) {
  const int din = ch.dim_in();
  const int dout = ch.dim_out();
  Matrix choi = Matrix::Zero(din * dout, din * dout);
  for (const auto& k : ch.kraus()) {
    // (I (x) K)|Omega> has component K[a,i] at index (i,a).
    Matrix w(din * dout, 1);
    for (int i = 0; i < din; ++i)
      for (int a = 0; a < dout; ++a) w(i * dout + a, 0) = k(a, i);
    choi += w * w.adjoint();
  }
  return choi;
}

QuantumChannel remix_kraus(const QuantumChannel& ch, const Matrix& u,
                           const Tolerances& tol) {
  const int env = ch.dim_env();
  if (u.rows() != env || u.cols() != env)
    throw DomainError("remix matrix must act on the Kraus-index space");
  const double unitarity =
      max_abs(Matrix(u.adjoint() * u - Matrix::Identity(env, env)));
  if (unitarity > 1e-9) {
    std::ostringstream msg;
    msg << "remix matrix is not unitary: ||u^dagger u - I||_max = "
        << unitarity;
    throw DomainError(msg.str());
  }
  std::vector<Matrix> remixed(env,
                              Matrix::Zero(ch.dim_out(), ch.dim_in()));
  for (int j = 0; j < env; ++j)
    for (int k = 0; k < env; ++k) remixed[j] += u(j, k) * ch.kraus()[k];
  return QuantumChannel(std::move(remixed), ch.name(), tol);
}

QuantumChannel identity_channel(int dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  return QuantumChannel({Matrix::Identity(dim, dim)}, "identity");
}

QuantumChannel depolarizing_channel(double p) {
  check_unit_interval(p, "depolarizing");
  const Matrix i2 = Matrix::Identity(2, 2);
  return QuantumChannel({std::sqrt(1.0 - 0.75 * p) * i2,
                         std::sqrt(0.25 * p) * pauli_x(),
                         std::sqrt(0.25 * p) * pauli_y(),
                         std::sqrt(0.25 * p) * pauli_z()},
                        "depolarizing");
}

QuantumChannel dephasing_channel(double p) {
  check_unit_interval(p, "dephasing");
  const Matrix i2 = Matrix::Identity(2, 2);
  return QuantumChannel(
      {std::sqrt(1.0 - p) * i2, std::sqrt(p) * pauli_z()}, "dephasing");
}

QuantumChannel amplitude_damping_channel(double gamma) {
  check_unit_interval(gamma, "amplitude damping");
  Matrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return QuantumChannel({k0, k1}, "amplitude-damping");
}

QuantumChannel erasure_channel(double p) {
  check_unit_interval(p, "erasure");
  Matrix embed = Matrix::Zero(3, 2);
  embed(0, 0) = 1.0;
  embed(1, 1) = 1.0;
  Matrix flag0 = Matrix::Zero(3, 2);
  flag0(2, 0) = 1.0;  // |e><0|
  Matrix flag1 = Matrix::Zero(3, 2);
  flag1(2, 1) = 1.0;  // |e><1|
  return QuantumChannel({std::sqrt(1.0 - p) * embed, std::sqrt(p) * flag0,
                         std::sqrt(p) * flag1},
                        "erasure");
}

QuantumChannel make_zoo_channel(const std::string& family, double param,
                                int dim) {
  if (family == "identity") return identity_channel(dim);
  if (family == "depolarizing") return depolarizing_channel(param);
  if (family == "dephasing") return dephasing_channel(param);
  if (family == "amplitude-damping") return amplitude_damping_channel(param);
  if (family == "erasure") return erasure_channel(param);
  throw DomainError("unknown channel family: " + family);
}

QuantumChannel random_channel(int dim_in, int dim_out, int n_kraus, Rng& rng,
                              const Tolerances& tol) {
  if (dim_in < 1 || dim_out < 1 || n_kraus < 1)
    throw DomainError("channel dimensions must be positive");
  if (dim_out * n_kraus < dim_in)
    throw DomainError(
        "dim_out * n_kraus must be at least dim_in for an isometry");
  const Matrix u = random_unitary(dim_out * n_kraus, rng);
  std::vector<Matrix> kraus(n_kraus, Matrix::Zero(dim_out, dim_in));
  for (int k = 0; k < n_kraus; ++k)
    for (int a = 0; a < dim_out; ++a)
      for (int i = 0; i < dim_in; ++i)
        kraus[k](a, i) = u(a * n_kraus + k, i);
  return QuantumChannel(std::move(kraus), "random", tol);
}

}  // namespace qpriv
