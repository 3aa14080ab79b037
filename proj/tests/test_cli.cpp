#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qdistill/cli.hpp"

using namespace qdistill;

namespace {

std::string data_path(const std::string& name) {
  return std::string(QDISTILL_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/qdistill_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("code-fidelity run writes a report and exits cleanly") {
  RunConfig cfg;
  cfg.command = Command::CodeFidelity;
  cfg.code_path = data_path("bitflip_code.json");
  cfg.noise_path = data_path("x_noise_01.json");
  cfg.output_path = temp_path("code_fidelity.csv");
  CHECK(run(cfg) == kExitOk);
  const std::string csv = slurp(cfg.output_path);
  CHECK(csv.find("scenario,d,n,K,rate,fidelity_way1,fidelity_way2,gap,bound_corollary1,"
                 "bound_hashing_or_markov,value") != std::string::npos);
  CHECK(csv.find("0.972") != std::string::npos);
  std::remove(cfg.output_path.c_str());
}

TEST_CASE("reports are bit-identical under a fixed seed") {
  for (const std::string format : {std::string("csv"), std::string("json")}) {
    RunConfig cfg;
    cfg.command = Command::VerifyLemma1;
    cfg.d = 2;
    cfg.n = 1;
    cfg.seed = 12345;
    cfg.format = format;
    cfg.output_path = temp_path("replay_a." + format);
    REQUIRE(run(cfg) == kExitOk);
    const std::string first = slurp(cfg.output_path);
    cfg.output_path = temp_path("replay_b." + format);
    REQUIRE(run(cfg) == kExitOk);
    CHECK(first == slurp(cfg.output_path));
    CHECK_FALSE(first.empty());
    std::remove(temp_path("replay_a." + format).c_str());
    std::remove(temp_path("replay_b." + format).c_str());
  }
}

TEST_CASE("config errors exit with the dedicated code") {
  RunConfig cfg;
  cfg.command = Command::Bounds;
  CHECK(run(cfg) == kExitConfigError);  // no noise file

  cfg.noise_path = data_path("x_noise_01.json");
  cfg.format = "xml";
  CHECK(run(cfg) == kExitConfigError);

  RunConfig exp;
  exp.command = Command::Exponent;
  exp.noise_path = data_path("x_noise_01.json");
  CHECK(run(exp) == kExitConfigError);  // exponent needs a rate and n = 1 semantics

  RunConfig mismatch;
  mismatch.command = Command::CodeFidelity;
  mismatch.code_path = data_path("zz_code_n2.json");
  mismatch.noise_path = data_path("x_noise_01.json");  // n = 3 vs n = 2
  CHECK(run(mismatch) == kExitConfigError);
}

TEST_CASE("guard violations exit with the dedicated code") {
  RunConfig cfg;
  cfg.command = Command::VerifyLemma1;
  cfg.d = 2;
  cfg.n = 7;  // bell basis would need dim 2^14
  CHECK(run(cfg) == kExitGuardViolation);
}

TEST_CASE("bounds command reports values and notes") {
  RunConfig cfg;
  cfg.command = Command::Bounds;
  cfg.noise_path = data_path("markov_x_burst.json");
  cfg.format = "json";
  cfg.output_path = temp_path("bounds.json");
  CHECK(run(cfg) == kExitOk);
  const std::string text = slurp(cfg.output_path);
  CHECK(text.find("bound_hashing_or_markov") != std::string::npos);
  CHECK(text.find("reducible chain") != std::string::npos);
  std::remove(cfg.output_path.c_str());
}

TEST_CASE("distill command passes its tolerance checks") {
  RunConfig cfg;
  cfg.command = Command::Distill;
  cfg.code_path = data_path("bitflip_code.json");
  cfg.noise_path = data_path("x_noise_01.json");
  cfg.samples = 2;
  cfg.seed = 9;
  CHECK(run(cfg) == kExitOk);
}
