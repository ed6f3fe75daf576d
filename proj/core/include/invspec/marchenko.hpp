#pragma once

#include <cmath>
#include <type_traits>
#include <vector>

#include "invspec/numerics.hpp"
#include "invspec/spectrum.hpp"

namespace invspec {

// Normalization constants c_n^2 = 2 k_n prod_{m != n} |(k_m + k_n)/(k_m - k_n)|,
// stored in the same (descending-kappa) order as the Spectrum.
struct NormConstants {
  std::vector<double> c_sq;
  double c(int n) const { return std::sqrt(c_sq[n]); }
};

NormConstants norm_constants(const Spectrum& s);

struct PotentialResult {
  double value = 0.0;
  double condition = 0.0;
  int precision_bits = 53;
};

namespace detail {

// Kernels templated on the working scalar so the same code path serves both
// native doubles and MPFR escalation.

template <typename T>
Matrix<T> c_matrix_t(const std::vector<double>& kappa,
                     const std::vector<double>& c_sq, double x) {
  using std::exp;
  using std::sqrt;
  const int n = static_cast<int>(kappa.size());
  std::vector<T> c(n);
  for (int i = 0; i < n; ++i) c[i] = sqrt(T(c_sq[i]));
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      T s = T(kappa[i]) + T(kappa[j]);
      T entry = c[i] * c[j] / s * exp(-s * T(x));
      m(i, j) = entry;
      m(j, i) = entry;
    }
  return m;
}

template <typename T>
T log_det_t(const std::vector<double>& kappa, const std::vector<double>& c_sq,
            double x) {
  Matrix<T> a = c_matrix_t<T>(kappa, c_sq, x);
  const int n = a.rows();
  for (int i = 0; i < n; ++i) a(i, i) += T(1);
  Lu<T> lu(std::move(a));
  if (lu.singular()) throw SingularMatrix("log_det: I + C is singular");
  return lu.log_abs_det();  // det(I + C) > 0 for positive semidefinite C
}

// V(x) = -2 [ tr(A^{-1} C'') - tr((A^{-1} C')^2) ] with A = I + C,
// C'_ij = -(k_i + k_j) C_ij and C''_ij = (k_i + k_j)^2 C_ij.
//
// With d_i = c_i e^{-k_i x} the derivative kernels are low rank:
// C' = -d d^T and C'' = u d^T + d u^T with u_i = k_i d_i. Factoring
// A = D (G + S) D, where S_ij = 1/(k_i + k_j) and G = diag(e^{2 k_i x}/c_i^2),
// reduces both traces to the single solve (G + S) y = 1:
//   tr(A^{-1} C'') = 2 sum_i k_i y_i,  tr((A^{-1} C')^2) = (sum_i y_i)^2.
// G + S avoids the exponential dynamic range of I + C, so this stays accurate
// in native doubles where the direct form loses digits to cancellation.
template <typename T>
T potential_t(const std::vector<double>& kappa, const std::vector<double>& c_sq,
              double x) {
  using std::exp;
  const int n = static_cast<int>(kappa.size());
  std::vector<int> idx;
  idx.reserve(n);
  for (int i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, double>) {
      // an overflowing diagonal weight pins y_i = 0; drop the index instead
      if (2.0 * kappa[i] * x > 700.0) continue;
    }
    idx.push_back(i);
  }
  const int m = static_cast<int>(idx.size());
  if (m == 0) return T(0);
  Matrix<T> a(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q)
      a(p, q) = T(1) / (T(kappa[idx[p]]) + T(kappa[idx[q]]));
    a(p, p) += exp(T(2) * T(kappa[idx[p]]) * T(x)) / T(c_sq[idx[p]]);
  }
  Lu<T> lu(std::move(a));
  if (lu.singular()) throw SingularMatrix("potential: I + C is singular");
  std::vector<T> rhs(m, T(1));
  const std::vector<T> y = lu.solve(rhs);
  T s1(0), sk(0);
  for (int p = 0; p < m; ++p) {
    s1 += y[p];
    sk += T(kappa[idx[p]]) * y[p];
  }
  return T(-2) * (T(2) * sk - s1 * s1);
}

// Natural-log scale of the largest C entry; > ~700 overflows a double.
inline double max_entry_exponent(const std::vector<double>& kappa, double x) {
  return x < 0.0 ? 2.0 * kappa.front() * (-x) : 0.0;
}

inline int bits_for_exponent(double log_scale, int base_bits) {
  int need = static_cast<int>(log_scale / 0.6931471805599453) + 128;
  return need > base_bits ? need : base_bits;
}

}  // namespace detail

// C matrix at a point, native precision. Throws OverflowError when the
// entries exceed double range; use potential()/log_det() with an escalating
// policy for such x.
Matrix<double> c_matrix(const Spectrum& s, const NormConstants& c, double x);

double log_det(const Spectrum& s, const NormConstants& c, double x,
               const PrecisionPolicy& policy = {});

// Reflectionless potential V(x) = -2 d^2/dx^2 ln det(I + C), evaluated through
// the analytic trace identities (no numerical differentiation).
double potential(const Spectrum& s, const NormConstants& c, double x,
                 const PrecisionPolicy& policy = {});
PotentialResult potential_detailed(const Spectrum& s, const NormConstants& c,
                                   double x, const PrecisionPolicy& policy = {});

std::vector<double> potential_on_grid(const Spectrum& s, const NormConstants& c,
                                      const Grid& g,
                                      const PrecisionPolicy& policy = {});

}  // namespace invspec
