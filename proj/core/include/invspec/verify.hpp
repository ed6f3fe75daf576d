#pragma once

#include <string>
#include <vector>

#include "invspec/numerics.hpp"
#include "invspec/spectrum.hpp"

#include "json.hpp"

namespace invspec {

struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int precision_bits = 53;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  void add(std::string name, double measured, double tolerance,
           int precision_bits = 53) {
    checks.push_back({std::move(name), measured, tolerance,
                      std::fabs(measured) <= tolerance, precision_bits});
  }
  void add_error(std::string name, const std::string& message);
  bool pass() const;
  nlohmann::ordered_json to_json() const;
  std::string table() const;
};

// Lowest `count` eigenvalues of -psi'' + V psi = E psi with decaying boundary
// conditions, via Numerov integration, node-count bisection, and refinement on
// the matching-derivative discontinuity. Independent of the inverse machinery.
std::vector<double> numerov_eigenvalues(const std::vector<double>& v_on_grid,
                                        const Grid& g, int count);

// Closed-form N = 1 oracle: compares engine potential, bound state, and
// scattering output against the sech/tanh expressions.
VerificationReport oracle_n1(double kappa1, const Grid& g,
                             const std::vector<double>& energies = {0.5, 1.0, 5.0, 20.0});

// Run the full pipeline for a spectrum and check every invariant: symmetry,
// decay, sum rule, cross-formula identity, normalization, orthogonality,
// parity, node counts, Schrodinger residuals, reflectionlessness, and the
// Numerov round trip. Wave-function checks run natively for N <= 5 and in
// extended precision for larger N.
VerificationReport full_verify(const Spectrum& s, const Grid& g,
                               const PrecisionPolicy& policy = PrecisionPolicy::native_auto());

}  // namespace invspec
