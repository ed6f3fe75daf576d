#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "invspec/cli.hpp"

namespace {

invspec::Grid parse_grid(const std::string& text) {
  double a, b;
  int n;
  char c1, c2;
  std::istringstream is(text);
  if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':')
    throw CLI::ValidationError("--grid expects x_min:x_max:n");
  try {
    return invspec::Grid(a, b, n);
  } catch (const invspec::Error& e) {
    throw CLI::ValidationError(e.what());
  }
}

invspec::PrecisionPolicy parse_precision(const std::string& text, bool auto_escalate) {
  invspec::PrecisionPolicy p;
  p.auto_escalate = auto_escalate;
  int env_bits = 0;
  if (const char* env = std::getenv("INVERSE_SPECTRUM_PRECISION_BITS"))
    env_bits = std::atoi(env);
  if (env_bits > 0) p.bits = env_bits;
  if (text == "native" || text.empty()) return p;
  if (text.rfind("extended", 0) == 0) {
    p.mode = invspec::PrecisionPolicy::Mode::extended;
    const auto colon = text.find(':');
    if (colon != std::string::npos) p.bits = std::atoi(text.c_str() + colon + 1);
    if (p.bits < 64)
      throw CLI::ValidationError("--precision extended:<bits> needs bits >= 64");
    return p;
  }
  throw CLI::ValidationError("--precision expects native or extended:<bits>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct reflectionless potentials, bound states, and "
               "scattering states from a bound-state energy spectrum"};
  app.require_subcommand(1);

  invspec::RunConfig cfg;
  std::string grid_text = "-8:8:1601";
  std::string precision_text = "native";
  bool auto_escalate = true;
  double single_energy = 0.0;
  std::string energies_text;

  auto add_common = [&](CLI::App* sub, bool wants_spectrum) {
    if (wants_spectrum) {
      sub->add_option("--preset", cfg.preset, "spectrum preset tag");
      sub->add_option("--spectrum", cfg.spectrum_file, "JSON spectrum file");
    }
    sub->add_option("--grid", grid_text, "evaluation grid x_min:x_max:n");
    sub->add_option("--precision", precision_text, "native | extended:<bits>");
    sub->add_flag("--auto-escalate,!--no-auto-escalate", auto_escalate,
                  "escalate precision on ill-conditioned solves (default on)");
    sub->add_option("--out", cfg.out_dir, "output directory");
  };

  CLI::App* pot = app.add_subcommand("potential", "emit V(x) with an energy-level sidecar");
  add_common(pot, true);
  CLI::App* bound = app.add_subcommand("bound", "emit normalized bound-state wave functions");
  add_common(bound, true);
  bound->add_flag("--raw", cfg.raw, "include unnormalized psi_n columns");
  CLI::App* scatter = app.add_subcommand("scatter", "emit complex scattering states");
  add_common(scatter, true);
  scatter->add_option("--energy", single_energy, "scattering energy E > 0");
  scatter->add_option("--energies", energies_text, "comma-separated energy list");
  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, true);
  verify->add_option("--report", cfg.report_path, "write JSON report here");
  CLI::App* figures = app.add_subcommand("figures", "emit the full figure dataset bundle");
  add_common(figures, false);
  figures->add_flag("--raw", cfg.raw, "include unnormalized psi_n columns");
  app.add_subcommand("presets", "list available spectrum presets");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.grid = parse_grid(grid_text);
    cfg.policy = parse_precision(precision_text, auto_escalate);
    if (scatter->parsed()) {
      if (single_energy > 0.0) cfg.energies.push_back(single_energy);
      if (!energies_text.empty()) {
        std::istringstream is(energies_text);
        std::string tok;
        while (std::getline(is, tok, ','))
          cfg.energies.push_back(std::strtod(tok.c_str(), nullptr));
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }

  return invspec::run(cfg);
}
