#include "qpriv/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qpriv {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log2_safe(double x) { return std::log(x) / kLn2; }

}  // namespace

int total_dim(const Dims& dims) {
  if (dims.empty()) throw DimensionError("empty dimension list");
  long long prod = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionError("subsystem dimensions must be positive");
    prod *= d;
    if (prod > kMaxTotalDim) {
      std::ostringstream msg;
      msg << "total dimension " << prod << " exceeds cap " << kMaxTotalDim;
      throw DimensionError(msg.str());
    }
  }
  return static_cast<int>(prod);
}

void check_dims(const Dims& dims, int side) {
  if (total_dim(dims) != side) {
    std::ostringstream msg;
    msg << "dimension list (product " << total_dim(dims)
        << ") does not match matrix side " << side;
    throw DimensionError(msg.str());
  }
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex& z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_hermitian(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(Matrix(m - m.adjoint())) <= rel_tol * scale;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const long long rows = static_cast<long long>(a.rows()) * b.rows();
  const long long cols = static_cast<long long>(a.cols()) * b.cols();
  if (std::max(rows, cols) > kMaxTotalDim) {
    std::ostringstream msg;
    msg << "tensor product of " << a.rows() << "x" << a.cols() << " and "
        << b.rows() << "x" << b.cols() << " exceeds dimension cap "
        << kMaxTotalDim;
    throw DimensionError(msg.str());
  }
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, const Dims& dims,
                     const std::vector<int>& keep) {
  if (m.rows() != m.cols()) throw DimensionError("partial trace needs a square matrix");
  check_dims(dims, static_cast<int>(m.rows()));
  const int n_factors = static_cast<int>(dims.size());
  if (keep.empty()) throw DimensionError("keep set must be non-empty");
  std::vector<bool> kept(n_factors, false);
  for (int k : keep) {
    if (k < 0 || k >= n_factors) throw DimensionError("keep index out of range");
    if (kept[k]) throw DimensionError("duplicate keep index");
    kept[k] = true;
  }

  int dim_keep = 1;
  for (int f = 0; f < n_factors; ++f)
    if (kept[f]) dim_keep *= dims[f];

  // Decompose each full index into its kept and traced sub-indices once.
  const int n = static_cast<int>(m.rows());
  std::vector<int> keep_part(n), trace_part(n);
  for (int idx = 0; idx < n; ++idx) {
    int rem = idx, kp = 0, tp = 0;
    for (int f = 0; f < n_factors; ++f) {
      int radix = 1;
      for (int g = f + 1; g < n_factors; ++g) radix *= dims[g];
      const int digit = rem / radix;
      rem %= radix;
      if (kept[f])
        kp = kp * dims[f] + digit;
      else
        tp = tp * dims[f] + digit;
    }
    keep_part[idx] = kp;
    trace_part[idx] = tp;
  }

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (trace_part[r] == trace_part[c])
        out(keep_part[r], keep_part[c]) += m(r, c);
  return out;
}

EigenSystem hermitian_eigensystem(const Matrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols())
    throw DimensionError("eigendecomposition needs a square matrix");
  if (!all_finite(m)) throw ValidationError("matrix has non-finite entries");
  if (!is_hermitian(m, tol.herm)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |m - m^dagger| = "
        << max_abs(Matrix(m - m.adjoint()));
    throw ValidationError(msg.str());
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericError("Hermitian eigensolver failed to converge");
  EigenSystem result;
  result.values.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + m.rows());
  result.vectors = solver.eigenvectors();
  return result;
}

double von_neumann_entropy(const Matrix& rho, const Tolerances& tol) {
  const EigenSystem eig = hermitian_eigensystem(rho, tol);
  double trace = 0.0;
  for (double v : eig.values) {
    if (v < -tol.psd) {
      std::ostringstream msg;
      msg << "matrix is not positive semidefinite: eigenvalue " << v;
      throw ValidationError(msg.str());
    }
    trace += v;
  }
  if (std::abs(trace - 1.0) > tol.trace) {
    std::ostringstream msg;
    msg << "matrix is not normalized: trace " << trace;
    throw ValidationError(msg.str());
  }
  double s = 0.0;
  for (double v : eig.values)
    if (v > tol.eig_floor) s -= v * log2_safe(v);
  return s;
}

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "binary entropy argument " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  p = std::clamp(p, 0.0, 1.0);
  double h = 0.0;
  if (p > 0.0) h -= p * log2_safe(p);
  if (p < 1.0) h -= (1.0 - p) * log2_safe(1.0 - p);
  return h;
}

double shannon_entropy(std::span<const double> p, double floor) {
  double h = 0.0;
  for (double x : p)
    if (x > floor) h -= x * log2_safe(x);
  return h;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("trace distance needs equal shapes");
  const EigenSystem eig = hermitian_eigensystem(Matrix(a - b));
  double sum = 0.0;
  for (double v : eig.values) sum += std::abs(v);
  return 0.5 * sum;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  // Box-Muller on two fresh uniforms; no cached half, so the stream is a
  // pure function of the call sequence.
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw DomainError("uniform_int: empty range");
  const int span = hi - lo + 1;
  int v = lo + static_cast<int>(uniform() * span);
  return std::min(v, hi);
}

Matrix random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw DomainError("unitary dimension must be positive");
  if (dim > kMaxTotalDim) throw DimensionError("dimension exceeds cap");
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_gaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

Matrix random_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

Matrix random_pure_state(int dim, Rng& rng) {
  if (dim < 1) throw DomainError("state dimension must be positive");
  Matrix v(dim, 1);
  double norm_sq = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i, 0) = rng.complex_gaussian();
    norm_sq = v.squaredNorm();
  } while (norm_sq < 1e-12);
  return v / std::sqrt(norm_sq);
}

Matrix random_density(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim)
    throw DomainError("density rank must lie in [1, dim]");
  // Uniform simplex weights via normalized exponentials.
  std::vector<double> w(rank);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  Matrix rho = Matrix::Zero(dim, dim);
  for (int k = 0; k < rank; ++k) {
    const Matrix v = random_pure_state(dim, rng);
    rho += (w[k] / total) * (v * v.adjoint());
  }
  return 0.5 * (rho + Matrix(rho.adjoint()));
}

}  // namespace qpriv
