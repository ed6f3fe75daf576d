#pragma once

#include <string>
#include <vector>

#include "invspec/errors.hpp"

namespace invspec {

struct SpectrumOptions {
  double separation_tol = 1e-9;  // relative, on kappa
  int max_states = 8;
};

// Ordered set of decay constants kappa_1 > kappa_2 > ... > kappa_N > 0;
// energies E_n = -kappa_n^2 are a derived view. Units hbar^2/2m = 1.
class Spectrum {
 public:
  static Spectrum from_energies(std::vector<double> energies,
                                const SpectrumOptions& opt = {});
  static Spectrum from_kappas(std::vector<double> kappas,
                              const SpectrumOptions& opt = {});

  const std::vector<double>& kappas() const { return kappas_; }
  const std::vector<double>& energies() const { return energies_; }
  int size() const { return static_cast<int>(kappas_.size()); }

  bool operator==(const Spectrum& o) const { return kappas_ == o.kappas_; }

 private:
  Spectrum() = default;
  std::vector<double> kappas_;    // strictly descending
  std::vector<double> energies_;  // ascending; kept verbatim from the input so
                                  // E -> kappa -> E round-trips exactly
};

enum class PresetKind { sho, isw, hydrogen, power, lost };

struct Preset {
  PresetKind kind = PresetKind::sho;
  int count = 0;        // 0 = kind default
  double offset = 0.0;  // 0 = kind default; well depth / ground energy, kind-specific
  double exponent = 4.0;  // power preset only
};

// Spectra matching the worked examples: sho levels offset + (2n - 1),
// isw levels offset + n^2, hydrogen levels offset / n^2, power levels
// offset + s n^p with s fixed so the top level sits at -1, lost the fixed
// six-value list.
Spectrum make_preset(const Preset& p, const SpectrumOptions& opt = {});
Preset preset_defaults(PresetKind kind);
PresetKind preset_from_name(const std::string& name);
std::string preset_name(PresetKind kind);
std::vector<std::string> preset_names();

// Unit calibration: size of one natural length unit expressed in the target
// unit, given the same energy-length product in both unit systems.
double calibrate_length(double known_product, double natural_product);

}  // namespace invspec
