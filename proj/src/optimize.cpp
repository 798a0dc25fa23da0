#include "qpriv/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <utility>

namespace qpriv {

namespace {

constexpr double kGradStep = 1e-5;
constexpr double kStepFloor = 1e-14;

void check_config(const OptimizerConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.step_init <= 0.0 ||
      cfg.tol_obj <= 0.0)
    throw DomainError("optimizer configuration values must be positive");
  if (cfg.tol_obj >= cfg.step_init)
    throw DomainError("tol_obj must be smaller than step_init");
}

using Objective = std::function<double(const std::vector<double>&)>;

struct AscentOutcome {
  std::vector<double> x;
  double value;
  bool converged;
};

std::vector<double> central_gradient(const Objective& f,
                                     std::vector<double> x) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + kGradStep;
    const double up = f(x);
    x[i] = saved - kGradStep;
    const double down = f(x);
    x[i] = saved;
    g[i] = (up - down) / (2.0 * kGradStep);
  }
  return g;
}

// Gradient ascent with backtracking step halving.  A run converges when an
// iteration improves the objective by less than tol_obj (or no uphill step
// exists at any length).
AscentOutcome ascend(const Objective& f, std::vector<double> x,
                     const OptimizerConfig& cfg) {
  double value = f(x);
  double step = cfg.step_init;
  bool converged = false;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const std::vector<double> g = central_gradient(f, x);
    double g_norm = 0.0;
    for (double v : g) g_norm += v * v;
    g_norm = std::sqrt(g_norm);
    if (g_norm < 1e-13) {
      converged = true;
      break;
    }
    double s = step;
    double new_value = value;
    bool improved = false;
    std::vector<double> trial(x.size());
    while (s > kStepFloor) {
      for (std::size_t i = 0; i < x.size(); ++i)
        trial[i] = x[i] + (s / g_norm) * g[i];
      new_value = f(trial);
      if (new_value > value) {
        improved = true;
        break;
      }
      s *= 0.5;
    }
    if (!improved) {
      converged = true;
      break;
    }
    const double gain = new_value - value;
    x = trial;
    value = new_value;
    step = std::min(s * 2.0, cfg.step_init);
    if (gain < cfg.tol_obj) {
      converged = true;
      break;
    }
  }
  return AscentOutcome{std::move(x), value, converged};
}

Matrix params_to_operator(const std::vector<double>& x, int dim) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const std::size_t base = 2 * (static_cast<std::size_t>(i) * dim + j);
      a(i, j) = Complex(x[base], x[base + 1]);
    }
  return a;
}

// rho = A A^dagger / Tr(A A^dagger); PSD and unit trace by construction.
DensityOperator params_to_density(const std::vector<double>& x, int dim,
                                  const Tolerances& tol) {
  const Matrix a = params_to_operator(x, dim);
  Matrix gram = a * a.adjoint();
  const double tr = gram.trace().real();
  if (tr < 1e-12) throw NumericError("degenerate input parameterization");
  gram /= tr;
  gram = 0.5 * (gram + Matrix(gram.adjoint()));
  return DensityOperator(std::move(gram), Dims{dim}, tol);
}

std::vector<double> softmax(std::span<const double> raw) {
  const double top = *std::max_element(raw.begin(), raw.end());
  std::vector<double> w(raw.size());
  double total = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    w[i] = std::exp(raw[i] - top);
    total += w[i];
  }
  for (double& v : w) v /= total;
  return w;
}

}  // namespace

OptimizerResult maximize_coherent_information(const QuantumChannel& ch,
                                              const OptimizerConfig& cfg,
                                              const Tolerances& tol) {
  check_config(cfg);
  const int dim = ch.dim_in();
  const std::size_t n_params = 2 * static_cast<std::size_t>(dim) * dim;

  const Objective objective = [&](const std::vector<double>& x) {
    return coherent_information(ch, params_to_density(x, dim, tol), tol);
  };

  std::vector<RunRecord> runs;
  std::vector<double> best_x;
  double best_value = 0.0;
  bool best_converged = false;

  const Rng base(cfg.seed);
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x0(n_params, 0.0);
    if (r == 0) {
      // A = I / sqrt(dim) gives the maximally mixed input.
      const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
      for (int i = 0; i < dim; ++i)
        x0[2 * (static_cast<std::size_t>(i) * dim + i)] = scale;
    } else {
      Rng rng = base.derive(static_cast<std::uint64_t>(r));
      for (double& v : x0) v = rng.gaussian();
    }
    const AscentOutcome run = ascend(objective, std::move(x0), cfg);
    runs.push_back(RunRecord{r, run.value});
    if (runs.size() == 1 || run.value > best_value) {
      best_value = run.value;
      best_x = run.x;
      best_converged = run.converged;
    }
  }

  return OptimizerResult{params_to_density(best_x, dim, tol), best_value,
                         std::move(runs), best_converged};
}

std::vector<SweepRecord> sweep(const std::string& family,
                               const std::vector<double>& params,
                               const std::string& input_policy,
                               const OptimizerConfig& cfg,
                               const Tolerances& tol) {
  if (params.empty()) throw DomainError("sweep grid must be non-empty");
  if (input_policy != "max-mixed" && input_policy != "optimized")
    throw DomainError("unknown input policy: " + input_policy);
  check_config(cfg);

  std::vector<SweepRecord> records;
  records.reserve(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const QuantumChannel ch = make_zoo_channel(family, params[i]);
    DensityOperator input = DensityOperator::maximally_mixed(ch.dim_in());
    if (input_policy == "optimized") {
      OptimizerConfig point_cfg = cfg;
      point_cfg.seed = cfg.seed + i;
      input = maximize_coherent_information(ch, point_cfg, tol).best_input;
    }
    const double s_output =
        von_neumann_entropy(apply(ch, input, tol).matrix(), tol);
    const double s_exchange = entropy_exchange(ch, input, tol);
    records.push_back(SweepRecord{params[i], s_output, s_exchange,
                                  s_output - s_exchange, input_policy});
  }
  return records;
}

PrivacyBoundResult maximize_privacy_bound(const QuantumChannel& ch,
                                          int n_signals,
                                          const OptimizerConfig& cfg,
                                          const Tolerances& tol) {
  if (n_signals < 2)
    throw DomainError("privacy-bound search needs at least two signals");
  check_config(cfg);
  const int dim = ch.dim_in();
  const std::size_t per_signal = 2 * static_cast<std::size_t>(dim);
  const std::size_t n_params =
      static_cast<std::size_t>(n_signals) * (per_signal + 1);

  const auto build_ensemble =
      [&](const std::vector<double>& x) -> Ensemble {
    std::vector<PureState> signals;
    signals.reserve(n_signals);
    for (int k = 0; k < n_signals; ++k) {
      Matrix v(dim, 1);
      for (int i = 0; i < dim; ++i) {
        const std::size_t base = k * per_signal + 2 * i;
        v(i, 0) = Complex(x[base], x[base + 1]);
      }
      const double norm = v.norm();
      if (norm < 1e-9) throw NumericError("signal vector collapsed to zero");
      signals.emplace_back(Matrix(v / norm));
    }
    const std::span<const double> raw(
        x.data() + static_cast<std::size_t>(n_signals) * per_signal,
        static_cast<std::size_t>(n_signals));
    return Ensemble::of_pure(softmax(raw), signals, tol);
  };

  const Objective objective = [&](const std::vector<double>& x) {
    try {
      return privacy_bound(ch, build_ensemble(x), tol);
    } catch (const NumericError&) {
      return -1e6;  // collapsed signal; repel the search
    }
  };

  const Rng base(cfg.seed);
  std::vector<double> best_x;
  double best_value = 0.0;
  bool best_converged = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x0(n_params, 0.0);
    if (r == 0) {
      // Computational-basis signals, uniform weights.
      for (int k = 0; k < n_signals; ++k)
        x0[k * per_signal + 2 * ((k % dim))] = 1.0;
    } else {
      Rng rng = base.derive(static_cast<std::uint64_t>(r));
      for (double& v : x0) v = rng.gaussian();
    }
    const AscentOutcome run = ascend(objective, std::move(x0), cfg);
    if (r == 0 || run.value > best_value) {
      best_value = run.value;
      best_x = run.x;
      best_converged = run.converged;
    }
  }

  const Ensemble best = build_ensemble(best_x);
  const double delta_chi = privacy_bound(ch, best, tol);
  const double identity_residual = std::abs(
      coherent_information(ch, average_state(best, tol), tol) - delta_chi);
  if (identity_residual >= 1e-8) {
    std::ostringstream msg;
    msg << "pure-input identity self-check failed: residual "
        << identity_residual;
    throw NumericError(msg.str());
  }
  return PrivacyBoundResult{best, delta_chi, best_converged};
}

}  // namespace qpriv
