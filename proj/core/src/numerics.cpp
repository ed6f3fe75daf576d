#include "invspec/numerics.hpp"

#include <cmath>

#include "invspec/bigfloat.hpp"

namespace invspec {

namespace {

double residual_inf(const Matrix<double>& a, const std::vector<double>& x,
                    const std::vector<double>& b) {
  const int n = a.rows();
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = -b[i];
    double row = std::fabs(b[i]);
    for (int j = 0; j < n; ++j) {
      r += a(i, j) * x[j];
      row += std::fabs(a(i, j) * x[j]);
    }
    num = std::max(num, std::fabs(r));
    den = std::max(den, row);
  }
  return den > 0.0 ? num / den : num;
}

}  // namespace

std::vector<double> solve_linear_extended(const Matrix<double>& a,
                                          const std::vector<double>& b, int bits) {
  PrecisionGuard guard(bits);
  const int n = a.rows();
  Matrix<BigFloat> ab(n, n);
  std::vector<BigFloat> bb(n);
  for (int i = 0; i < n; ++i) {
    bb[i] = b[i];
    for (int j = 0; j < n; ++j) ab(i, j) = a(i, j);
  }
  Lu<BigFloat> lu(std::move(ab));
  if (lu.singular()) throw SingularMatrix("extended solve: matrix is singular");
  std::vector<BigFloat> xb = lu.solve(bb);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = xb[i].convert_to<double>();
  return x;
}

SolveResult solve_linear(const Matrix<double>& a, const std::vector<double>& b,
                         const PrecisionPolicy& policy) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
    throw InvalidParams("solve_linear: shape mismatch");

  SolveResult res;
  Lu<double> lu(a);
  res.condition = lu.singular() ? std::numeric_limits<double>::infinity()
                                : a.norm_1() * lu.inverse_norm_1_estimate();

  const bool need_extended =
      policy.mode == PrecisionPolicy::Mode::extended ||
      (policy.auto_escalate &&
       (lu.singular() || res.condition > policy.condition_threshold));

  if (!need_extended) {
    if (lu.singular()) throw SingularMatrix("solve_linear: matrix is singular");
    res.x = lu.solve(b);
    res.precision_bits = 53;
    return res;
  }

  int bits = policy.bits < 64 ? 256 : policy.bits;
  for (;;) {
    res.x = solve_linear_extended(a, b, bits);
    res.precision_bits = bits;
    if (residual_inf(a, res.x, b) < 1e-12 || bits >= 1024) break;
    bits *= 2;
  }
  return res;
}

}  // namespace invspec
