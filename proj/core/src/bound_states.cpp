#include "invspec/bound_states.hpp"

#include <cmath>

#include "invspec/bigfloat.hpp"

namespace invspec {

namespace {

constexpr double kDoubleExpLimit = 700.0;

double km_exponent(const std::vector<double>& kappa,
                   const std::vector<double>& c_sq, double x) {
  double lc = 0.0;
  for (double v : c_sq) lc = std::max(lc, std::log(v));
  return (x > 0.0 ? 2.0 * kappa.front() * x : 0.0) + lc;
}

}  // namespace

KayMosesSystem kay_moses_matrix(const Spectrum& s, const NormConstants& c,
                                double x) {
  const auto& k = s.kappas();
  if (km_exponent(k, c.c_sq, x) > kDoubleExpLimit)
    throw OverflowError("kay_moses_matrix: entries overflow double at x = " +
                        std::to_string(x));
  const int n = s.size();
  KayMosesSystem sys{Matrix<double>(n, n), std::vector<double>(n)};
  std::vector<double> ex(n);
  for (int i = 0; i < n; ++i) ex[i] = std::exp(k[i] * x);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sys.m(i, j) = c.c_sq[i] * ex[i] * ex[j] / (k[i] + k[j]);
      if (i == j) sys.m(i, j) += 1.0;
    }
    sys.rhs[i] = -c.c_sq[i] * ex[i];
  }
  return sys;
}

BoundStateSet bound_states(const Spectrum& s, const NormConstants& c,
                           const Grid& g, const PrecisionPolicy& policy) {
  const auto& k = s.kappas();
  const int n = s.size();
  const double tail = std::exp(-k.back() * g.x_max);
  if (tail > 0.05)
    std::fprintf(stderr,
                 "warning: grid tail e^{-kappa_N x_max} = %.3g > 0.05; "
                 "normalization and asymptotics will be degraded\n", tail);

  BoundStateSet out;
  out.grid = g;
  out.psi.assign(n, std::vector<double>(g.n_points, 0.0));
  out.c.resize(n);
  for (int i = 0; i < n; ++i) out.c[i] = c.c(i);

  const bool extended = policy.mode == PrecisionPolicy::Mode::extended;
  const int bits = policy.bits < 64 ? 256 : policy.bits;
  for (int ix = 0; ix < g.n_points; ++ix) {
    const double x = g.x(ix);
    if (!extended) {
      std::vector<double> sol = detail::kay_moses_solve_t<double>(k, c.c_sq, x);
      for (int i = 0; i < n; ++i) out.psi[i][ix] = sol[i];
      continue;
    }
    PrecisionGuard guard(bits);
    std::vector<BigFloat> sol = detail::kay_moses_solve_t<BigFloat>(k, c.c_sq, x);
    for (int i = 0; i < n; ++i) out.psi[i][ix] = sol[i].convert_to<double>();
    if (bits > out.max_precision_bits) out.max_precision_bits = bits;
  }
  return out;
}

double potential_via_states(const Spectrum& s, const NormConstants&,
                            const BoundStateSet& states, double x) {
  const Grid& g = states.grid;
  const double h = g.h();
  const double fi = (x - g.x_min) / h;
  const int i = static_cast<int>(std::lround(fi));
  if (std::fabs(fi - i) > 1e-6)
    throw EdgeOfGrid("potential_via_states: x is not a grid point");
  if (i < 2 || i > g.n_points - 3)
    throw EdgeOfGrid("potential_via_states: stencil leaves the grid");

  const auto& k = s.kappas();
  auto sum_at = [&](int j) {
    double sum = 0.0;
    for (int n = 0; n < states.size(); ++n)
      sum += states.psi[n][j] * std::exp(k[n] * g.x(j));
    return sum;
  };
  const double d = (sum_at(i - 2) - 8.0 * sum_at(i - 1) + 8.0 * sum_at(i + 1) -
                    sum_at(i + 2)) / (12.0 * h);
  return 2.0 * d;
}

}  // namespace invspec
