// Dense complex-matrix foundation: tensor products, partial traces,
// Hermitian eigendecomposition, entropies (base-2 throughout), and seeded
// random generators for states and unitaries.

#ifndef QPRIV_QMATH_HPP
#define QPRIV_QMATH_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qpriv/errors.hpp"

namespace qpriv {

using Complex = std::complex<double>;

// Row-major storage so the in-memory layout matches the JSON wire format
// (list of rows).
using Matrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Ordered subsystem dimensions of a tensor-factored space.  The product of
// the entries equals the side length of the matrix it describes.
using Dims = std::vector<int>;

// Largest total Hilbert-space dimension the toolkit will allocate.
inline constexpr int kMaxTotalDim = 4096;

// Numerical tolerances, threaded explicitly through every validating
// operation.  `herm` is relative in the max-norm; the rest are absolute.
struct Tolerances {
  double herm = 1e-10;
  double psd = 1e-9;
  double trace = 1e-9;
  // Eigenvalues at or below this are treated as exactly zero in entropies.
  double eig_floor = 1e-12;
};

int total_dim(const Dims& dims);

// Checks `dims` against a square matrix side length.
void check_dims(const Dims& dims, int side);

double max_abs(const Matrix& m);
bool all_finite(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol);

// Kronecker product, row-major lexicographic index convention.
Matrix tensor_product(const Matrix& a, const Matrix& b);

// Reduces a square matrix on the tensor factors listed in `keep` (original
// order preserved), tracing out the rest.  Trace-preserving.
Matrix partial_trace(const Matrix& m, const Dims& dims,
                     const std::vector<int>& keep);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column i pairs with values[i]
};

// Spectral decomposition of a Hermitian matrix.  The input is symmetrized
// as (m + m†)/2 before solving; inputs farther than tol.herm from Hermitian
// are rejected.
EigenSystem hermitian_eigensystem(const Matrix& m, const Tolerances& tol = {});

// S(rho) = -Tr rho log2 rho, in bits.  Validates Hermiticity, positivity
// within tol.psd and unit trace within tol.trace.
double von_neumann_entropy(const Matrix& rho, const Tolerances& tol = {});

// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

// -sum p_i log2 p_i over entries above the floor.
double shannon_entropy(std::span<const double> p, double floor = 1e-12);

// Half the trace norm of a - b.
double trace_distance(const Matrix& a, const Matrix& b);

// Deterministic seeded generator.  One algorithm project-wide (mt19937_64
// with a hand-rolled Box-Muller transform) so fixed seeds reproduce across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Independent stream for a work item; restarts and sweep points use
  // derive(index) so results merge deterministically.
  Rng derive(std::uint64_t index) const { return Rng(seed_ + index); }

  std::uint64_t seed() const { return seed_; }

  double uniform();                    // [0, 1)
  double gaussian();                   // standard normal
  Complex complex_gaussian();          // independent N(0,1) parts
  int uniform_int(int lo, int hi);     // inclusive range

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
// of the triangular factor's diagonal absorbed into Q.
Matrix random_unitary(int dim, Rng& rng);
Matrix random_unitary(int dim, std::uint64_t seed);

// Unit-norm column vector with Haar-uniform direction.
Matrix random_pure_state(int dim, Rng& rng);

// Mixture of `rank` random pure projectors with uniform-simplex weights.
Matrix random_density(int dim, int rank, Rng& rng);

}  // namespace qpriv

#endif  // QPRIV_QMATH_HPP
