// JSON wire formats for channels, states, ensembles, POVMs and reports,
// plus the CSV sweep table.  Complex numbers are always [re, im] pairs; a
// matrix is a list of rows of pairs, a state vector a list of pairs.
//
// Report payloads round reals to 12 significant digits; object
// serialization (channels, states) keeps full precision so a round trip
// reproduces the operator bit-for-bit.

#ifndef QPRIV_SERIALIZE_HPP
#define QPRIV_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qpriv/optimize.hpp"

namespace qpriv {

using Json = nlohmann::ordered_json;

// Nearest double to the 12-significant-digit decimal rendering of x.
double round12(double x);
// "%.12g" rendering, used for CSV cells.
std::string format_real(double x);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Column vectors serialize as a flat list of [re, im] pairs.
Json vector_to_json(const Matrix& column);

Json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const Json& j, const Tolerances& tol = {});

// A state entry is a column vector (list of pairs) or a density matrix
// (list of rows of pairs); vectors become projectors on parse.
Json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j, const Tolerances& tol = {});

Json povm_to_json(const Povm& m);
Povm povm_from_json(const Json& j, const Tolerances& tol = {});

Json report_to_json(const AnalysisReport& report);
Json privacy_to_json(const PrivacyEstimate& estimate);
Json optimizer_result_to_json(const OptimizerResult& result);

Json sweep_to_json(const std::vector<SweepRecord>& records);
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

}  // namespace qpriv

#endif  // QPRIV_SERIALIZE_HPP
