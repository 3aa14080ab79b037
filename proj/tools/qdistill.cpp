// Command line front end. All computation lives in the library; this file
// only parses flags into a RunConfig.

#include <CLI11.hpp>

#include "qdistill/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Teleportation-channel and entanglement-distillation toolkit"};
  app.require_subcommand(1);

  qdistill::RunConfig config;
  double rate = -1.0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--d", config.d, "Qudit dimension");
    cmd->add_option("--n", config.n, "Number of systems per side");
    cmd->add_option("--seed", config.seed, "Seed for random batteries");
    cmd->add_option("--output", config.output_path, "Report file path");
    cmd->add_option("--format", config.format, "Report format: csv | json");
  };

  CLI::App* verify = app.add_subcommand("verify-lemma1",
                                        "Compare the full teleportation simulation with the "
                                        "closed-form channel");
  add_common(verify);

  CLI::App* twirl = app.add_subcommand("twirl", "Check the twirling average against the Bell-diagonal projection");
  add_common(twirl);

  CLI::App* choi = app.add_subcommand("choi-roundtrip", "Check both Choi round trips");
  add_common(choi);

  CLI::App* code_fid = app.add_subcommand("code-fidelity",
                                          "Code entanglement fidelity, two independent ways");
  add_common(code_fid);
  code_fid->add_option("--code", config.code_path, "Code spec JSON")->required();
  code_fid->add_option("--noise", config.noise_path, "Noise model JSON")->required();

  CLI::App* distill = app.add_subcommand("distill", "Run the full distillation protocol");
  add_common(distill);
  distill->add_option("--code", config.code_path, "Code spec JSON")->required();
  distill->add_option("--noise", config.noise_path, "Noise model JSON")->required();
  distill->add_option("--sample", config.samples, "Also print this many sampled measurement outcomes");

  CLI::App* bounds = app.add_subcommand("bounds", "Distillable-rate lower bound of a noise model");
  add_common(bounds);
  bounds->add_option("--noise", config.noise_path, "Noise model JSON")->required();

  CLI::App* exponent = app.add_subcommand("exponent", "Error exponent E(R, P) of an iid noise model");
  add_common(exponent);
  exponent->add_option("--noise", config.noise_path, "Noise model JSON")->required();
  exponent->add_option("--rate", rate, "Rate R in [0, 1]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qdistill::kExitConfigError;
  }

  if (verify->parsed()) config.command = qdistill::Command::VerifyLemma1;
  else if (twirl->parsed()) config.command = qdistill::Command::Twirl;
  else if (choi->parsed()) config.command = qdistill::Command::ChoiRoundtrip;
  else if (code_fid->parsed()) config.command = qdistill::Command::CodeFidelity;
  else if (distill->parsed()) config.command = qdistill::Command::Distill;
  else if (bounds->parsed()) config.command = qdistill::Command::Bounds;
  else if (exponent->parsed()) config.command = qdistill::Command::Exponent;
  if (rate >= 0.0) config.rate = rate;

  return qdistill::run(config);
}
