#include "invspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace invspec {

Spectrum Spectrum::from_energies(std::vector<double> energies,
                                 const SpectrumOptions& opt) {
  if (energies.empty()) throw InvalidParams("from_energies: empty list");
  std::vector<double> kappas;
  kappas.reserve(energies.size());
  for (double e : energies) {
    if (e >= 0.0)
      throw NonNegativeEnergy("from_energies: E = " + std::to_string(e) +
                              " is not a bound state energy");
    kappas.push_back(std::sqrt(-e));
  }
  Spectrum s = from_kappas(std::move(kappas), opt);
  // keep the input values verbatim so energies() round-trips exactly
  std::sort(energies.begin(), energies.end());
  s.energies_ = std::move(energies);
  return s;
}

Spectrum Spectrum::from_kappas(std::vector<double> kappas,
                               const SpectrumOptions& opt) {
  if (kappas.empty()) throw InvalidParams("from_kappas: empty list");
  if (static_cast<int>(kappas.size()) > opt.max_states)
    throw TooManyStates("spectrum has " + std::to_string(kappas.size()) +
                        " states, cap is " + std::to_string(opt.max_states));
  for (double k : kappas)
    if (!(k > 0.0)) throw NonNegativeEnergy("kappa must be positive");
  std::sort(kappas.begin(), kappas.end(), std::greater<>());
  for (size_t i = 0; i + 1 < kappas.size(); ++i) {
    if ((kappas[i] - kappas[i + 1]) / kappas[i] < opt.separation_tol)
      throw DegenerateSpectrum("kappas " + std::to_string(kappas[i]) + " and " +
                               std::to_string(kappas[i + 1]) +
                               " are degenerate within tolerance");
  }
  Spectrum s;
  s.kappas_ = std::move(kappas);
  s.energies_.resize(s.kappas_.size());
  for (size_t i = 0; i < s.kappas_.size(); ++i)
    s.energies_[i] = -s.kappas_[i] * s.kappas_[i];
  return s;
}

Preset preset_defaults(PresetKind kind) {
  Preset p;
  p.kind = kind;
  switch (kind) {
    case PresetKind::sho:
      p.count = 4;
      p.offset = -10.0;  // levels -10 + (2n-1): spacing 2 matches k = 2, m = 1/2
      break;
    case PresetKind::isw:
      p.count = 4;
      p.offset = -26.0;  // V0 = -26, L = pi well: E_n = V0 + n^2
      break;
    case PresetKind::hydrogen:
      p.count = 4;
      p.offset = -13.6;  // Rydberg ground state; E_n = offset / n^2
      break;
    case PresetKind::power:
      p.count = 5;
      p.offset = -26.0;  // E_n = offset + s n^4, s fixed so the top level is -1
      p.exponent = 4.0;
      break;
    case PresetKind::lost:
      p.count = 6;
      break;
  }
  return p;
}

Spectrum make_preset(const Preset& p, const SpectrumOptions& opt) {
  Preset d = preset_defaults(p.kind);
  const int count = p.count > 0 ? p.count : d.count;
  const double offset = p.offset != 0.0 ? p.offset : d.offset;
  std::vector<double> e;
  switch (p.kind) {
    case PresetKind::sho:
      for (int n = 1; n <= count; ++n) e.push_back(offset + (2 * n - 1));
      break;
    case PresetKind::isw:
      for (int n = 1; n <= count; ++n) e.push_back(offset + n * n);
      break;
    case PresetKind::hydrogen:
      if (offset >= 0.0) throw InvalidParams("hydrogen preset: ground energy must be negative");
      for (int n = 1; n <= count; ++n) e.push_back(offset / (n * n));
      break;
    case PresetKind::power: {
      const double pexp = p.exponent > 0.0 ? p.exponent : d.exponent;
      if (offset >= -1.0)
        throw InvalidParams("power preset: offset must be below -1");
      // Levels offset + s n^p, scale chosen so the shallowest level sits at -1.
      const double s = (-1.0 - offset) / std::pow(count, pexp);
      for (int n = 1; n <= count; ++n) e.push_back(offset + s * std::pow(n, pexp));
      break;
    }
    case PresetKind::lost:
      e = {-4.0, -8.0, -15.0, -16.0, -23.0, -42.0};
      break;
  }
  for (double en : e)
    if (en >= 0.0)
      throw InvalidParams("preset offset leaves a non-negative level at E = " +
                          std::to_string(en));
  return Spectrum::from_energies(std::move(e), opt);
}

PresetKind preset_from_name(const std::string& name) {
  if (name == "sho") return PresetKind::sho;
  if (name == "isw") return PresetKind::isw;
  if (name == "hydrogen") return PresetKind::hydrogen;
  if (name == "power" || name == "power4") return PresetKind::power;
  if (name == "lost") return PresetKind::lost;
  throw InvalidParams("unknown preset '" + name + "'");
}

std::string preset_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::sho: return "sho";
    case PresetKind::isw: return "isw";
    case PresetKind::hydrogen: return "hydrogen";
    case PresetKind::power: return "power";
    case PresetKind::lost: return "lost";
  }
  return "?";
}

std::vector<std::string> preset_names() {
  return {"sho", "isw", "hydrogen", "power", "lost"};
}

double calibrate_length(double known_product, double natural_product) {
  if (!(known_product > 0.0) || !(natural_product > 0.0))
    throw NonPositiveInput("calibrate_length: products must be positive");
  return known_product / natural_product;
}

}  // namespace invspec
