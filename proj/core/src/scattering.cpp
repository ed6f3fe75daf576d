#include "invspec/scattering.hpp"

#include <cmath>

namespace invspec {

using cplx = std::complex<double>;

ScatteringState scattering_state(const Spectrum& s, const BoundStateSet& states,
                                 double energy) {
  if (!(energy > 0.0))
    throw NonPositiveEnergy("scattering_state: E must be positive");
  const Grid& g = states.grid;
  ScatteringState out;
  out.energy = energy;
  out.k = std::sqrt(energy);
  out.grid = g;
  out.psi.resize(g.n_points);
  const auto& kap = s.kappas();
  const int n = states.size();
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.x(i);
    cplx sum = 1.0;
    for (int m = 0; m < n; ++m)
      sum += states.psi[m][i] * std::exp(kap[m] * x) / cplx(kap[m], out.k);
    out.psi[i] = sum * std::exp(cplx(0.0, out.k * x));
  }
  return out;
}

ScatteringState free_scattering_state(double energy, const Grid& g) {
  if (!(energy > 0.0))
    throw NonPositiveEnergy("free_scattering_state: E must be positive");
  ScatteringState out;
  out.energy = energy;
  out.k = std::sqrt(energy);
  out.grid = g;
  out.psi.resize(g.n_points);
  for (int i = 0; i < g.n_points; ++i)
    out.psi[i] = std::exp(cplx(0.0, out.k * g.x(i)));
  return out;
}

double transmission(const ScatteringState& state) {
  return std::norm(state.psi.back());
}

double transmission_tail_bound(const Spectrum& s, const Grid& g) {
  return std::exp(-2.0 * s.kappas().back() * g.x_max);
}

double scattering_residual(const std::vector<double>& v_on_grid,
                           const ScatteringState& state) {
  const Grid& g = state.grid;
  const double h2 = g.h() * g.h();
  double max_res = 0.0, max_psi = 0.0;
  for (const cplx& p : state.psi) max_psi = std::max(max_psi, std::abs(p));
  for (int i = 2; i < g.n_points - 2; ++i) {
    const cplx d2 = (-state.psi[i - 2] + 16.0 * state.psi[i - 1] -
                     30.0 * state.psi[i] + 16.0 * state.psi[i + 1] -
                     state.psi[i + 2]) / (12.0 * h2);
    const cplx r = -d2 + (v_on_grid[i] - state.energy) * state.psi[i];
    max_res = std::max(max_res, std::abs(r));
  }
  return max_res / max_psi;
}

ReflectionFit reflection_fit(const ScatteringState& state, double window) {
  const Grid& g = state.grid;
  const double x0 = g.x_max - window;
  // Normal equations for the 2-basis complex least squares.
  cplx a11 = 0.0, a12 = 0.0, a22 = 0.0, r1 = 0.0, r2 = 0.0;
  int count = 0;
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.x(i);
    if (x < x0) continue;
    const cplx u = std::exp(cplx(0.0, state.k * x));   // transmitted basis
    const cplx v = std::exp(cplx(0.0, -state.k * x));  // reflected basis
    a11 += std::conj(u) * u;
    a12 += std::conj(u) * v;
    a22 += std::conj(v) * v;
    r1 += std::conj(u) * state.psi[i];
    r2 += std::conj(v) * state.psi[i];
    ++count;
  }
  if (count < 3) throw InvalidParams("reflection_fit: tail window too narrow");
  const cplx a21 = std::conj(a12);
  const cplx det = a11 * a22 - a12 * a21;
  ReflectionFit fit;
  fit.alpha = (a22 * r1 - a12 * r2) / det;
  fit.beta = (a11 * r2 - a21 * r1) / det;
  fit.ratio = std::abs(fit.beta) / std::abs(fit.alpha);
  return fit;
}

}  // namespace invspec
