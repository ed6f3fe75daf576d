#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "invspec/numerics.hpp"
#include "invspec/spectrum.hpp"

namespace invspec {

// Parsed CLI invocation; `run` maps it onto the pipeline and the exporters.
struct RunConfig {
  std::string command;        // potential | bound | scatter | verify | figures | presets
  std::string preset;         // preset tag, or empty
  std::string spectrum_file;  // JSON spectrum path, or empty
  Grid grid;
  PrecisionPolicy policy = PrecisionPolicy::native_auto();
  std::vector<double> energies;  // scatter energies
  std::string out_dir = ".";
  std::string report_path;
  bool raw = false;
};

// Exit codes: 0 success, 1 input error, 2 numerical failure,
// 3 verification failure.
int run(const RunConfig& cfg, std::ostream& out = std::cout,
        std::ostream& diag = std::cerr);

}  // namespace invspec
