// Shared helpers for the unit and acceptance suites: small fixed operators,
// comparison utilities, and constructions of distinct pure ensembles that
// share an average state.

#ifndef QPRIV_TESTS_SUPPORT_HPP
#define QPRIV_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef QPRIV_CLI_PATH
#include <sys/wait.h>
#endif

#include "qpriv/quantities.hpp"

namespace qpriv::testing {

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Matrix ket(std::initializer_list<Complex> amps) {
  Matrix v(static_cast<Eigen::Index>(amps.size()), 1);
  Eigen::Index i = 0;
  for (const Complex& a : amps) v(i++, 0) = a;
  return v;
}

inline Matrix ket_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return ket({s, s});
}

inline Matrix ket_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return ket({s, -s});
}

inline double max_diff(const Matrix& a, const Matrix& b) {
  return max_abs(Matrix(a - b));
}

// Sorted eigenvalues above a floor; for comparing spectra of operators that
// live on different-size spaces.
inline std::vector<double> nonzero_spectrum(const Matrix& m,
                                            double floor = 1e-12) {
  const EigenSystem eig = hermitian_eigensystem(m);
  std::vector<double> out;
  for (double v : eig.values)
    if (v > floor) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Steering construction: purify rho, rotate the reference side by a random
// unitary, and read off the pure-state ensemble Alice would prepare by
// measuring R.  Averages to rho up to rounding, but the members differ from
// the spectral ensemble.
inline Ensemble steered_ensemble(const DensityOperator& rho, Rng& rng,
                                 const Tolerances& tol = {}) {
  const PureState psi = purify(rho, tol);
  const int r_dim = psi.dims()[0];
  const int q_dim = psi.dims()[1];
  const Matrix u = random_unitary(r_dim, rng);
  std::vector<double> probs;
  std::vector<PureState> members;
  for (int i = 0; i < r_dim; ++i) {
    Matrix w = Matrix::Zero(q_dim, 1);
    for (int alpha = 0; alpha < r_dim; ++alpha)
      for (int q = 0; q < q_dim; ++q)
        w(q, 0) += std::conj(u(alpha, i)) * psi.vector()(alpha * q_dim + q, 0);
    const double p = w.squaredNorm();
    if (p < 1e-12) continue;
    probs.push_back(p);
    members.emplace_back(Matrix(w / std::sqrt(p)));
  }
  double total = 0.0;
  for (double p : probs) total += p;
  for (double& p : probs) p /= total;
  return Ensemble::of_pure(std::move(probs), members, tol);
}

#ifdef QPRIV_CLI_PATH

struct CliResult {
  int exit_code;
  std::string output;
};

// Runs the built CLI binary; stderr is dropped unless merged.
inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(QPRIV_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), std::move(out)};
}

#endif  // QPRIV_CLI_PATH

}  // namespace qpriv::testing

#endif  // QPRIV_TESTS_SUPPORT_HPP
