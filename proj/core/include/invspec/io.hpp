#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "invspec/numerics.hpp"
#include "invspec/spectrum.hpp"

namespace invspec {

// Shortest float text that round-trips a double (17 significant digits max).
std::string format_double(double v);

struct Column {
  std::string name;
  std::vector<double> values;
};

// Comma-delimited, one header line, deterministic float formatting.
void write_csv(const std::filesystem::path& path, const std::vector<Column>& cols);

// Energy-level sidecar: columns n, E_n (ground state first).
void write_levels_csv(const std::filesystem::path& path,
                      const std::vector<double>& energies);

// Read back a CSV written by write_csv.
std::vector<Column> read_csv(const std::filesystem::path& path);

// Spectrum file: {"energies": [...]} or {"kappas": [...]}, exactly one key.
Spectrum read_spectrum_file(const std::filesystem::path& path,
                            const SpectrumOptions& opt = {});

// Gnuplot-ready whitespace-separated data (x, curves...), with the energy
// levels appended as separate horizontal-segment blocks.
void write_gnuplot_dat(const std::filesystem::path& path,
                       const std::vector<Column>& cols,
                       const std::vector<double>& levels = {});

// Self-contained SVG line plot of a curve with horizontal energy-level
// segments, matching the published figure style. Hand-rolled paths; the
// CSV/dat files stay the canonical output.
void write_svg_plot(const std::filesystem::path& path,
                    const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<double>& levels,
                    const std::string& title);

}  // namespace invspec
