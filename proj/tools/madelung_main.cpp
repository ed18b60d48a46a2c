#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "madelung/cli.hpp"

namespace {

struct SubcommandState {
  std::map<std::string, std::string> params;
  std::string output_format = "json";
  std::string dataset_path;
};

void add_param(CLI::App *cmd, SubcommandState &state, const std::string &name,
               const std::string &help, bool flag = false) {
  if (flag) {
    cmd->add_flag_callback(
        "--" + name, [&state, name] { state.params[name] = "true"; }, help);
  } else {
    cmd->add_option_function<std::string>(
        "--" + name,
        [&state, name](const std::string &value) { state.params[name] = value; },
        help);
  }
}

void add_common(CLI::App *cmd, SubcommandState &state) {
  cmd->add_option("--output-format", state.output_format,
                  "Report format: json or csv")
      ->capture_default_str();
  cmd->add_option("--dataset-path", state.dataset_path,
                  "Element dataset CSV ('none' disables the bundled file)");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Orbital-filling rules, Dirac-Coulomb spectra and "
               "Richardson-Gaudin pairing models"};
  app.require_subcommand(1);
  std::map<std::string, SubcommandState> states;

  auto *aufbau = app.add_subcommand("aufbau", "Fill orbitals for atomic number Z");
  add_param(aufbau, states["aufbau"], "rule", "fockn, hydrogenic or madelung");
  add_param(aufbau, states["aufbau"], "z", "atomic number (1..118)");
  add_param(aufbau, states["aufbau"], "classify",
            "also diff against the experimental dataset", true);
  add_param(aufbau, states["aufbau"], "core",
            "noble-gas core symbol, 'auto' or 'none'");

  auto *classify = app.add_subcommand("classify",
                                      "Madelung-regular or exceptional for Z");
  add_param(classify, states["classify"], "z", "atomic number");

  auto *spectrum = app.add_subcommand("spectrum",
                                      "Hydrogenic or Madelung-regular levels");
  add_param(spectrum, states["spectrum"], "kind", "hydrogen or madelung");
  add_param(spectrum, states["spectrum"], "z", "nuclear charge");
  add_param(spectrum, states["spectrum"], "nr-max", "largest radial number");
  add_param(spectrum, states["spectrum"], "l-max", "largest angular momentum");

  auto *dirac = app.add_subcommand("dirac", "Dirac-Coulomb level energies");
  add_param(dirac, states["dirac"], "z", "nuclear charge");
  add_param(dirac, states["dirac"], "nr", "radial quantum number");
  add_param(dirac, states["dirac"], "kappa", "Dirac quantum number (nonzero)");
  add_param(dirac, states["dirac"], "alpha", "fine-structure constant");

  auto *richardson = app.add_subcommand("richardson",
                                        "Exact pairing spectrum for N pairs");
  add_param(richardson, states["richardson"], "levels",
            "comma-separated level energies");
  add_param(richardson, states["richardson"], "degeneracies",
            "comma-separated pair degeneracies (default all 1)");
  add_param(richardson, states["richardson"], "g", "pairing coupling");
  add_param(richardson, states["richardson"], "pairs", "number of pairs");

  auto *bdg = app.add_subcommand("bdg", "Bogoliubov-de Gennes 2x2 block");
  add_param(bdg, states["bdg"], "epsilon", "single-particle energy");
  add_param(bdg, states["bdg"], "delta", "off-diagonal coupling");

  auto *swscan = app.add_subcommand("swscan",
                                    "Cauchy-Schwarz margin scan over Z");
  add_param(swscan, states["swscan"], "nr", "radial quantum number");
  add_param(swscan, states["swscan"], "l", "angular momentum of the harmonic");
  add_param(swscan, states["swscan"], "kappa", "Dirac quantum number");
  add_param(swscan, states["swscan"], "zmax", "largest charge to scan (<= 137)");
  add_param(swscan, states["swscan"], "alpha", "fine-structure constant");

  app.add_subcommand("verify", "Run the full invariant suite");

  for (auto &[name, state] : states)
    add_common(app.get_subcommand(name), state);
  add_common(app.get_subcommand("verify"), states["verify"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto *sub = app.get_subcommands().front();
  const auto &state = states.at(sub->get_name());
  madelung::cli::RunConfig config;
  config.command = sub->get_name();
  config.parameters = state.params;
  config.output_format = state.output_format;
  config.dataset_path = state.dataset_path;

  const auto result = madelung::cli::run(config);
  if (!result.output.empty())
    std::cout << result.output;
  if (!result.error.empty())
    std::cerr << result.error << "\n";
  return result.exit_code;
}
