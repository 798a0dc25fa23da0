#include <doctest.h>

#include <string>

#include "support.hpp"
#include "qpriv/serialize.hpp"

using namespace qpriv;
using namespace qpriv::testing;

TEST_CASE("matrix JSON round trip is exact") {
  Rng rng(2);
  const Matrix m = random_density(3, 2, rng);
  const Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK(max_diff(m, back) == 0.0);
}

TEST_CASE("matrix parsing rejects malformed entries") {
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[]")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2]]")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[[1, 0]], [[1, 0], [0, 0]]]")),
                  ValidationError);
}

TEST_CASE("channel JSON round trip preserves the Choi matrix") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const QuantumChannel ch = random_channel(2, 3, 3, rng);
    const QuantumChannel back = channel_from_json(channel_to_json(ch));
    CHECK(max_diff(choi_matrix(ch), choi_matrix(back)) < 1e-12);
    CHECK(back.name() == ch.name());
    CHECK(back.dim_in() == ch.dim_in());
    CHECK(back.dim_out() == ch.dim_out());
  }
}

TEST_CASE("channel parsing validates the document") {
  CHECK_THROWS_AS(channel_from_json(Json::parse("{}")), ValidationError);
  // Declared dimensions must match the Kraus shapes.
  Json j = channel_to_json(identity_channel(2));
  j["dim_in"] = 3;
  CHECK_THROWS_AS(channel_from_json(j), ValidationError);
  // Kraus list that is not a channel.
  Json bad = channel_to_json(identity_channel(2));
  bad["kraus"][0][0][0][0] = 0.5;
  CHECK_THROWS_AS(channel_from_json(bad), ValidationError);
}

TEST_CASE("ensemble JSON accepts vectors and matrices") {
  const Json doc = Json::parse(R"({
    "probs": [0.5, 0.5],
    "states": [
      [[1.0, 0.0], [0.0, 0.0]],
      [[[0.5, 0.0], [0.5, 0.0]], [[0.5, 0.0], [0.5, 0.0]]]
    ]
  })");
  const Ensemble e = ensemble_from_json(doc);
  REQUIRE(e.size() == 2);
  // First entry was a |0> column vector, parsed into its projector.
  CHECK(max_diff(e.states()[0].matrix(),
                 PureState::basis(0, 2).projector().matrix()) < 1e-15);
  // Second was the |+><+| density matrix.
  CHECK(max_diff(e.states()[1].matrix(),
                 PureState(ket_plus()).projector().matrix()) < 1e-15);
}

TEST_CASE("column vectors serialize as flat pair lists") {
  Json doc;
  doc["probs"] = {1.0};
  doc["states"] = Json::array({vector_to_json(ket_plus())});
  const Ensemble e = ensemble_from_json(doc);
  CHECK(max_diff(e.states()[0].matrix(),
                 PureState(ket_plus()).projector().matrix()) < 1e-15);
}

TEST_CASE("ensemble JSON round trip") {
  Rng rng(5);
  const Ensemble e = random_pure_ensemble(3, 3, rng);
  const Ensemble back = ensemble_from_json(ensemble_to_json(e));
  REQUIRE(back.size() == e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    CHECK(back.probs()[k] == e.probs()[k]);
    CHECK(max_diff(back.states()[k].matrix(), e.states()[k].matrix()) == 0.0);
  }
}

TEST_CASE("povm JSON round trip") {
  Rng rng(7);
  const Povm m = random_povm(2, 3, rng);
  const Povm back = povm_from_json(povm_to_json(m));
  REQUIRE(back.size() == m.size());
  for (std::size_t j = 0; j < m.size(); ++j)
    CHECK(max_diff(back.effects()[j], m.effects()[j]) == 0.0);
}

TEST_CASE("report JSON carries all fields and a nullable residual") {
  AnalysisReport report{1.0, 0.25, 0.75, 0.9, 0.1, 0.8, std::nullopt};
  Json j = report_to_json(report);
  CHECK(j["s_output"] == 1.0);
  CHECK(j["identity_residual"].is_null());
  report.identity_residual = 3e-12;
  j = report_to_json(report);
  CHECK(j["identity_residual"].get<double>() == doctest::Approx(3e-12));
}

TEST_CASE("round12 keeps twelve significant digits") {
  const double third = 1.0 / 3.0;
  CHECK(round12(third) == doctest::Approx(third).epsilon(1e-11));
  CHECK(round12(third) != third);
  CHECK(format_real(round12(third)) == "0.333333333333");
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("sweep CSV has the documented header and row shape") {
  const std::vector<SweepRecord> records =
      sweep("dephasing", {0.0, 0.5}, "max-mixed");
  const std::string csv = sweep_to_csv(records);
  CHECK(csv.rfind("param,s_output,s_exchange,coherent_info,input_policy\n",
                  0) == 0);
  CHECK(csv.find("max-mixed") != std::string::npos);
  // One header plus one line per record.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
