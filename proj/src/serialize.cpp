#include "qpriv/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qpriv {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("complex entries must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

bool looks_like_vector(const Json& j) {
  // [[re, im], ...] vs [[[re, im], ...], ...]
  return j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() &&
         j[0][0].is_number();
}

Matrix column_from_json(const Json& j) {
  if (!looks_like_vector(j))
    throw ValidationError("state vector must be a list of [re, im] pairs");
  Matrix v(j.size(), 1);
  for (std::size_t i = 0; i < j.size(); ++i) v(i, 0) = complex_from_json(j[i]);
  return v;
}

}  // namespace

double round12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_real(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ValidationError("matrix must be a non-empty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw ValidationError("matrix rows must be non-empty lists");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ValidationError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Json vector_to_json(const Matrix& column) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < column.rows(); ++i)
    out.push_back(complex_to_json(column(i, 0)));
  return out;
}

Json channel_to_json(const QuantumChannel& ch) {
  Json j;
  j["name"] = ch.name();
  j["dim_in"] = ch.dim_in();
  j["dim_out"] = ch.dim_out();
  Json kraus = Json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  return j;
}

QuantumChannel channel_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("kraus"))
    throw ValidationError("channel document needs a \"kraus\" list");
  const Json& kraus_json = j["kraus"];
  if (!kraus_json.is_array() || kraus_json.empty())
    throw ValidationError("\"kraus\" must be a non-empty list of matrices");
  std::vector<Matrix> kraus;
  kraus.reserve(kraus_json.size());
  for (const auto& k : kraus_json) kraus.push_back(matrix_from_json(k));
  const std::string name = j.value("name", std::string{});
  QuantumChannel ch(std::move(kraus), name, tol);
  if (j.contains("dim_in") && j["dim_in"].get<int>() != ch.dim_in())
    throw ValidationError("declared dim_in does not match the Kraus shapes");
  if (j.contains("dim_out") && j["dim_out"].get<int>() != ch.dim_out())
    throw ValidationError("declared dim_out does not match the Kraus shapes");
  return ch;
}

Json ensemble_to_json(const Ensemble& e) {
  Json j;
  j["probs"] = e.probs();
  Json states = Json::array();
  for (const auto& s : e.states()) states.push_back(matrix_to_json(s.matrix()));
  j["states"] = std::move(states);
  return j;
}

Ensemble ensemble_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("probs") || !j.contains("states"))
    throw ValidationError("ensemble needs \"probs\" and \"states\"");
  std::vector<double> probs;
  for (const auto& p : j["probs"]) {
    if (!p.is_number()) throw ValidationError("probabilities must be numbers");
    probs.push_back(p.get<double>());
  }
  std::vector<DensityOperator> states;
  for (const auto& s : j["states"]) {
    if (looks_like_vector(s)) {
      Matrix v = column_from_json(s);
      const double norm = v.norm();
      if (norm < 1e-12) throw ValidationError("zero state vector");
      v /= norm;
      states.emplace_back(v * v.adjoint(), tol);
    } else {
      states.emplace_back(matrix_from_json(s), tol);
    }
  }
  return Ensemble(std::move(probs), std::move(states));
}

Json povm_to_json(const Povm& m) {
  Json effects = Json::array();
  for (const auto& e : m.effects()) effects.push_back(matrix_to_json(e));
  Json j;
  j["effects"] = std::move(effects);
  return j;
}

Povm povm_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("effects"))
    throw ValidationError("POVM document needs an \"effects\" list");
  std::vector<Matrix> effects;
  for (const auto& e : j["effects"]) effects.push_back(matrix_from_json(e));
  return Povm(std::move(effects), tol);
}

Json report_to_json(const AnalysisReport& report) {
  Json j;
  j["s_output"] = round12(report.s_output);
  j["s_exchange"] = round12(report.s_exchange);
  j["coherent_info"] = round12(report.coherent_info);
  j["chi_q"] = round12(report.chi_q);
  j["chi_e"] = round12(report.chi_e);
  j["delta_chi"] = round12(report.delta_chi);
  if (report.identity_residual)
    j["identity_residual"] = round12(*report.identity_residual);
  else
    j["identity_residual"] = nullptr;
  return j;
}

Json privacy_to_json(const PrivacyEstimate& estimate) {
  Json j;
  j["h_bob"] = round12(estimate.h_bob);
  j["h_eve"] = round12(estimate.h_eve);
  j["privacy"] = round12(estimate.privacy);
  j["guaranteed_floor"] = round12(estimate.guaranteed_floor);
  return j;
}

Json optimizer_result_to_json(const OptimizerResult& result) {
  Json j;
  j["best_value"] = round12(result.best_value);
  Json best_input = Json::array();
  const Matrix& rho = result.best_input.matrix();
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < rho.cols(); ++c)
      row.push_back(Json::array(
          {round12(rho(r, c).real()), round12(rho(r, c).imag())}));
    best_input.push_back(std::move(row));
  }
  j["best_input"] = std::move(best_input);
  j["converged"] = result.converged;
  Json runs = Json::array();
  for (const auto& run : result.trace_of_runs) {
    Json entry;
    entry["restart"] = run.restart;
    entry["value"] = round12(run.value);
    runs.push_back(std::move(entry));
  }
  j["runs"] = std::move(runs);
  return j;
}

Json sweep_to_json(const std::vector<SweepRecord>& records) {
  Json out = Json::array();
  for (const auto& rec : records) {
    Json j;
    j["param"] = round12(rec.param);
    j["s_output"] = round12(rec.s_output);
    j["s_exchange"] = round12(rec.s_exchange);
    j["coherent_info"] = round12(rec.coherent_info);
    j["input_policy"] = rec.input_policy;
    out.push_back(std::move(j));
  }
  return out;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "param,s_output,s_exchange,coherent_info,input_policy\n";
  for (const auto& rec : records)
    out << format_real(rec.param) << ',' << format_real(rec.s_output) << ','
        << format_real(rec.s_exchange) << ',' << format_real(rec.coherent_info)
        << ',' << rec.input_policy << '\n';
  return out.str();
}

}  // namespace qpriv
