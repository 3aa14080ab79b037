#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "qdistill/io.hpp"
#include "qdistill/random.hpp"

using namespace qdistill;
using nlohmann::json;

namespace {

std::string data_path(const std::string& name) {
  return std::string(QDISTILL_DATA_DIR) + "/" + name;
}

void expect_validation_error(const json& j, const std::string& needle) {
  try {
    load_noise_json(j);
    FAIL("expected a validation error mentioning ", needle);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("shipped noise files parse") {
  CHECK(load_noise_file(data_path("x_noise_01.json")).form() == PauliDistribution::Form::IID);
  CHECK(load_noise_file(data_path("markov_isotropic_01.json")).form() ==
        PauliDistribution::Form::Markov);
  CHECK(load_noise_file(data_path("markov_x_burst.json")).n() == 3);
}

TEST_CASE("shipped code files parse") {
  const Subspace l = load_code_file(data_path("bitflip_code.json"));
  CHECK(l.d() == 2);
  CHECK(l.n() == 3);
  CHECK(l.dim() == 2);
  CHECK(is_self_orthogonal(l));
}

TEST_CASE("noise JSON round trips through every form") {
  Rng rng(501);
  const PauliDistribution iid = PauliDistribution::iid(2, 2, random_simplex_point(4, rng));
  const PauliDistribution iid_back = load_noise_json(noise_to_json(iid));
  CHECK((iid.to_explicit() - iid_back.to_explicit()).cwiseAbs().maxCoeff() < 1e-15);

  RealMatrix t(4, 4);
  for (Index u = 0; u < 4; ++u) t.row(u) = random_simplex_point(4, rng).transpose();
  const PauliDistribution mk = PauliDistribution::markov(2, 2, random_simplex_point(4, rng), t);
  const PauliDistribution mk_back = load_noise_json(noise_to_json(mk));
  CHECK(mk_back.form() == PauliDistribution::Form::Markov);
  CHECK((mk.to_explicit() - mk_back.to_explicit()).cwiseAbs().maxCoeff() < 1e-15);

  const PauliDistribution expl =
      PauliDistribution::explicit_table(3, 1, random_simplex_point(9, rng));
  const PauliDistribution expl_back = load_noise_json(noise_to_json(expl));
  CHECK((expl.to_explicit() - expl_back.to_explicit()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("noise validation errors name the offending field") {
  expect_validation_error(json{{"n", 1}, {"form", "iid"}}, "'d'");
  expect_validation_error(json{{"d", 2}, {"n", 1}, {"form", "nope"}}, "'form'");
  expect_validation_error(json{{"d", 2}, {"n", 1}, {"form", "iid"}}, "'single_letter'");
  expect_validation_error(
      json{{"d", 2}, {"n", 1}, {"form", "iid"}, {"single_letter", {0.5, 0.5, 0.0}}},
      "single_letter");
  expect_validation_error(json{{"d", 2},
                               {"n", 1},
                               {"form", "markov"},
                               {"initial", {1.0, 0.0, 0.0, 0.0}},
                               {"transition", {{1.0, 0.0, 0.0, 0.0}}}},
                          "transition");
  // Duplicate explicit labels.
  expect_validation_error(json{{"d", 2},
                               {"n", 1},
                               {"form", "explicit"},
                               {"table",
                                {{{"label", {{0, 0}}}, {"p", 0.5}},
                                 {{"label", {{0, 0}}}, {"p", 0.5}}}}},
                          "duplicate");
  // Letters outside [0, d).
  expect_validation_error(
      json{{"d", 2}, {"n", 1}, {"form", "explicit"}, {"table", {{{"label", {{2, 0}}}, {"p", 1.0}}}}},
      "out of range");
}

TEST_CASE("code validation errors name the violating pair") {
  json bad = {{"d", 2}, {"n", 1}, {"stabilizer_basis", {{1, 0}, {0, 1}}}};
  try {
    load_code_json(bad);
    FAIL("expected rejection of a non-self-orthogonal basis");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("0 and 1") != std::string::npos);
    CHECK(what.find("symplectic form") != std::string::npos);
  }
  CHECK_THROWS_AS(load_code_json(json{{"d", 4}, {"n", 1}, {"stabilizer_basis", {{0, 1}}}}),
                  ValidationError);
  CHECK_THROWS_AS(load_code_json(json{{"d", 2}, {"n", 1}, {"stabilizer_basis", {{0, 3}}}}),
                  ValidationError);
}

TEST_CASE("code JSON round trips") {
  const Subspace l = load_code_file(data_path("bitflip_code.json"));
  CHECK(load_code_json(code_to_json(l)) == l);
}

TEST_CASE("missing files raise a validation error") {
  CHECK_THROWS_AS(load_noise_file("/nonexistent/noise.json"), ValidationError);
  CHECK_THROWS_AS(load_code_file("/nonexistent/code.json"), ValidationError);
}
