#pragma once

#include <vector>

#include "invspec/marchenko.hpp"
#include "invspec/numerics.hpp"
#include "invspec/spectrum.hpp"

namespace invspec {

struct KayMosesSystem {
  Matrix<double> m;
  std::vector<double> rhs;
};

// M psi = rhs at a point, with M_nv = delta_nv + c_n^2 e^{k_n x} e^{k_v x}/(k_n + k_v)
// and rhs_n = -c_n^2 e^{k_n x}. The solution is the unnormalized psi_n(x).
KayMosesSystem kay_moses_matrix(const Spectrum& s, const NormConstants& c,
                                double x);

// Unnormalized bound-state samples psi[n][i] on a grid; psi_n / c_n is the
// normalized view. State n = 0 is the ground state.
struct BoundStateSet {
  Grid grid;
  std::vector<std::vector<double>> psi;  // [state][grid index]
  std::vector<double> c;                 // c_n = +sqrt(c_n^2)
  int max_precision_bits = 53;

  int size() const { return static_cast<int>(psi.size()); }
  double normalized(int n, int i) const { return psi[n][i] / c[n]; }
  std::vector<double> normalized_state(int n) const {
    std::vector<double> out(psi[n].size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = psi[n][i] / c[n];
    return out;
  }
};

BoundStateSet bound_states(const Spectrum& s, const NormConstants& c,
                           const Grid& g, const PrecisionPolicy& policy = {});

// Alternative potential route V(x) = 2 d/dx sum_n psi_n(x) e^{k_n x}, evaluated
// with a 5-point stencil on the grid samples. x must coincide with a grid point
// at least two points away from either edge.
double potential_via_states(const Spectrum& s, const NormConstants& c,
                            const BoundStateSet& states, double x);

namespace detail {

// Solves M psi = rhs through the scaled form: substituting
// phi_n = e^{k_n x} psi_n and dividing row n by c_n^2 e^{k_n x} turns the
// system into (G + S) phi = -1 with S_nv = 1/(k_n + k_v) and
// G = diag(e^{-2 k_n x} / c_n^2). G + S keeps a bounded condition number at
// every x, where the raw M picks up the full e^{2 k_1 x} dynamic range.
template <typename T>
std::vector<T> kay_moses_solve_t(const std::vector<double>& kappa,
                                 const std::vector<double>& c_sq, double x) {
  using std::exp;
  using std::log;
  const int n = static_cast<int>(kappa.size());
  std::vector<int> idx;
  idx.reserve(n);
  for (int i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, double>) {
      // overflowing diagonal weight pins phi_i ~ -c_i^2 e^{2 k_i x} ~ 0
      if (-2.0 * kappa[i] * x - log(c_sq[i]) > 700.0) continue;
    }
    idx.push_back(i);
  }
  std::vector<T> psi(n, T(0));
  const int m = static_cast<int>(idx.size());
  if (m == 0) return psi;
  Matrix<T> a(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q)
      a(p, q) = T(1) / (T(kappa[idx[p]]) + T(kappa[idx[q]]));
    a(p, p) += exp(T(-2) * T(kappa[idx[p]]) * T(x)) / T(c_sq[idx[p]]);
  }
  Lu<T> lu(std::move(a));
  if (lu.singular())
    throw SingularMatrix("kay_moses: system singular at x = " + std::to_string(x));
  std::vector<T> rhs(m, T(-1));
  const std::vector<T> phi = lu.solve(rhs);
  for (int p = 0; p < m; ++p)
    psi[idx[p]] = phi[p] * exp(T(-kappa[idx[p]]) * T(x));
  return psi;
}

}  // namespace detail

}  // namespace invspec
