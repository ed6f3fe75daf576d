#include "invspec/cli.hpp"

#include <filesystem>
#include <fstream>

#include "invspec/bound_states.hpp"
#include "invspec/io.hpp"
#include "invspec/marchenko.hpp"
#include "invspec/scattering.hpp"
#include "invspec/verify.hpp"

namespace invspec {

namespace fs = std::filesystem;

namespace {

Spectrum resolve_spectrum(const RunConfig& cfg) {
  if (cfg.preset.empty() == cfg.spectrum_file.empty())
    throw InvalidParams("exactly one of --preset or --spectrum is required");
  if (!cfg.preset.empty()) {
    Preset p;
    p.kind = preset_from_name(cfg.preset);
    return make_preset(p);
  }
  return read_spectrum_file(cfg.spectrum_file);
}

void export_potential_bundle(const fs::path& dir, const Spectrum& s,
                             const Grid& g, const PrecisionPolicy& policy,
                             const std::string& title) {
  fs::create_directories(dir);
  const NormConstants c = norm_constants(s);
  const std::vector<double> v = potential_on_grid(s, c, g, policy);
  const std::vector<double> xs = g.points();
  write_csv(dir / "potential.csv", {{"x", xs}, {"V", v}});
  write_levels_csv(dir / "levels.csv", s.energies());
  write_gnuplot_dat(dir / "potential.dat", {{"x", xs}, {"V", v}}, s.energies());
  write_svg_plot(dir / "plot.svg", xs, v, s.energies(), title);
}

void export_bound_csv(const fs::path& path, const Spectrum& s,
                      const BoundStateSet& states, bool raw) {
  std::vector<Column> cols;
  cols.push_back({"x", states.grid.points()});
  for (int n = 0; n < states.size(); ++n)
    cols.push_back({"psi_" + std::to_string(n + 1), states.normalized_state(n)});
  if (raw)
    for (int n = 0; n < states.size(); ++n)
      cols.push_back({"psi_raw_" + std::to_string(n + 1), states.psi[n]});
  (void)s;
  write_csv(path, cols);
}

int run_impl(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const fs::path dir(cfg.out_dir);

  if (cfg.command == "presets") {
    for (const std::string& name : preset_names()) {
      Preset p;
      p.kind = preset_from_name(name);
      const Spectrum s = make_preset(p);
      out << name << ":";
      for (double e : s.energies()) out << " " << format_double(e);
      out << "\n";
    }
    return 0;
  }

  if (cfg.command == "potential") {
    const Spectrum s = resolve_spectrum(cfg);
    export_potential_bundle(dir, s, cfg.grid, cfg.policy, "reflectionless potential");
    out << "wrote " << (dir / "potential.csv").string() << ", levels.csv, "
        << "potential.dat, plot.svg\n";
    return 0;
  }

  if (cfg.command == "bound") {
    const Spectrum s = resolve_spectrum(cfg);
    const NormConstants c = norm_constants(s);
    fs::create_directories(dir);
    const BoundStateSet states = bound_states(s, c, cfg.grid, cfg.policy);
    export_bound_csv(dir / "bound.csv", s, states, cfg.raw);
    out << "wrote " << (dir / "bound.csv").string() << "\n";
    return 0;
  }

  if (cfg.command == "scatter") {
    const Spectrum s = resolve_spectrum(cfg);
    if (cfg.energies.empty())
      throw InvalidParams("scatter: provide --energy or --energies");
    const NormConstants c = norm_constants(s);
    fs::create_directories(dir);
    const BoundStateSet states = bound_states(s, c, cfg.grid, cfg.policy);
    for (double e : cfg.energies) {
      const ScatteringState st = scattering_state(s, states, e);
      std::vector<Column> cols(4);
      cols[0].name = "x";
      cols[1].name = "Re(Psi)";
      cols[2].name = "Im(Psi)";
      cols[3].name = "|Psi|^2";
      for (int i = 0; i < cfg.grid.n_points; ++i) {
        cols[0].values.push_back(cfg.grid.x(i));
        cols[1].values.push_back(st.psi[i].real());
        cols[2].values.push_back(st.psi[i].imag());
        cols[3].values.push_back(std::norm(st.psi[i]));
      }
      const fs::path path = dir / ("scatter_E" + format_double(e) + ".csv");
      write_csv(path, cols);
      out << "wrote " << path.string() << " (T = "
          << format_double(transmission(st)) << ")\n";
    }
    return 0;
  }

  if (cfg.command == "verify") {
    const Spectrum s = resolve_spectrum(cfg);
    const VerificationReport rep = full_verify(s, cfg.grid, cfg.policy);
    out << rep.table();
    if (!cfg.report_path.empty()) {
      std::ofstream rf(cfg.report_path);
      if (!rf) throw Error("cannot open report file " + cfg.report_path);
      rf << rep.to_json().dump(2) << "\n";
    }
    return rep.pass() ? 0 : 3;
  }

  if (cfg.command == "figures") {
    struct Fig {
      std::string dir;
      std::string preset;  // empty = oracle
    };
    const std::vector<Fig> figs = {{"sho", "sho"},       {"isw", "isw"},
                                   {"hydrogen", "hydrogen"}, {"power4", "power"},
                                   {"lost", "lost"},     {"oracle_n1", ""}};
    for (const Fig& f : figs) {
      Spectrum s = f.preset.empty()
                       ? Spectrum::from_kappas({1.0})
                       : [&] {
                           Preset p;
                           p.kind = preset_from_name(f.preset);
                           return make_preset(p);
                         }();
      const fs::path sub = dir / f.dir;
      export_potential_bundle(sub, s, cfg.grid, cfg.policy, f.dir);
      if (s.size() <= 5) {
        const NormConstants c = norm_constants(s);
        const BoundStateSet states = bound_states(s, c, cfg.grid, cfg.policy);
        export_bound_csv(sub / "bound.csv", s, states, cfg.raw);
      }
      out << "wrote " << sub.string() << "/\n";
    }
    return 0;
  }

  throw InvalidParams("unknown command '" + cfg.command + "'");
  (void)diag;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  try {
    return run_impl(cfg, out, diag);
  } catch (const NonNegativeEnergy& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const DegenerateSpectrum& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const TooManyStates& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const InvalidParams& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const NonPositiveInput& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const NonPositiveEnergy& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const EdgeOfGrid& e) {
    diag << "input error: " << e.what() << "\n";
  } catch (const Error& e) {
    diag << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace invspec
