#pragma once

#include <complex>
#include <vector>

#include "invspec/bound_states.hpp"
#include "invspec/numerics.hpp"
#include "invspec/spectrum.hpp"

namespace invspec {

// Complex scattering state Psi(x, E) for E > 0 on a grid.
struct ScatteringState {
  double energy = 0.0;
  double k = 0.0;  // sqrt(E)
  Grid grid;
  std::vector<std::complex<double>> psi;
};

// Psi(x,E) = [1 + sum_n psi_n(x) e^{k_n x} / (kappa_n + i k)] e^{i k x},
// built from the *unnormalized* psi_n of the Kay-Moses system. An empty
// state set gives the free particle e^{ikx}.
ScatteringState scattering_state(const Spectrum& s, const BoundStateSet& states,
                                 double energy);
ScatteringState free_scattering_state(double energy, const Grid& g);

// |Psi(x_max, E)|^2; ~1 up to the finite-tail error e^{-2 kappa_N x_max}.
double transmission(const ScatteringState& state);

// Finite-tail error bound on the transmission evaluated at x_max.
double transmission_tail_bound(const Spectrum& s, const Grid& g);

// Max interior |-Psi'' + V Psi - E Psi| / max |Psi| with 5-point stencils.
double scattering_residual(const std::vector<double>& v_on_grid,
                           const ScatteringState& state);

struct ReflectionFit {
  std::complex<double> alpha;  // e^{+ikx} amplitude
  std::complex<double> beta;   // e^{-ikx} amplitude
  double ratio = 0.0;          // |beta| / |alpha|
};

// Least-squares fit of the far-right tail to alpha e^{ikx} + beta e^{-ikx};
// ratio ~ 0 certifies reflectionlessness.
ReflectionFit reflection_fit(const ScatteringState& state, double window = 1.0);

}  // namespace invspec
