#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "invspec/errors.hpp"

namespace invspec {

// Uniform 1-D evaluation grid.
struct Grid {
  double x_min = -8.0;
  double x_max = 8.0;
  int n_points = 1601;

  Grid() = default;
  Grid(double a, double b, int n) : x_min(a), x_max(b), n_points(n) {
    if (!(x_min < x_max)) throw InvalidParams("Grid: x_min must be < x_max");
    if (n_points < 5) throw InvalidParams("Grid: need at least 5 points");
  }

  double h() const { return (x_max - x_min) / (n_points - 1); }
  double x(int i) const { return x_min + i * h(); }
  std::vector<double> points() const {
    std::vector<double> p(n_points);
    for (int i = 0; i < n_points; ++i) p[i] = x(i);
    return p;
  }
};

struct PrecisionPolicy {
  enum class Mode { native, extended };
  Mode mode = Mode::native;
  int bits = 256;                     // used when mode == extended or on escalation
  bool auto_escalate = false;
  double condition_threshold = 1e12;

  static PrecisionPolicy native_auto() {
    PrecisionPolicy p;
    p.auto_escalate = true;
    return p;
  }
  static PrecisionPolicy extended(int bits) {
    PrecisionPolicy p;
    p.mode = Mode::extended;
    p.bits = bits < 64 ? 64 : bits;
    return p;
  }
};

// Dense row-major matrix; sized for the small systems in this problem (N <= 8
// typically), no attempt at blocked or structured algorithms.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T value = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, value) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  T norm_1() const {  // max column sum
    using std::fabs;
    T best(0);
    for (int j = 0; j < cols_; ++j) {
      T s(0);
      for (int i = 0; i < rows_; ++i) s += fabs((*this)(i, j));
      if (s > best) best = s;
    }
    return best;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// LU factorization with partial pivoting. Keeps the factors around so that
// log|det|, solves against A and A^T, and the condition estimate all come
// from the same decomposition.
template <typename T>
class Lu {
 public:
  explicit Lu(Matrix<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    using std::fabs;
    const int n = lu_.rows();
    if (n != lu_.cols()) throw InvalidParams("Lu: matrix not square");
    std::iota(perm_.begin(), perm_.end(), 0);
    // Singularity floor is per row: a pivot counts as zero relative to the
    // largest entry of its own original row, so rows of very different scales
    // (common here, diagonal weights span e^{2 kappa x}) don't trip it.
    std::vector<T> row_scale(n, T(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (fabs(lu_(i, j)) > row_scale[i]) row_scale[i] = fabs(lu_(i, j));
    for (int k = 0; k < n; ++k) {
      int p = k;
      for (int i = k + 1; i < n; ++i)
        if (fabs(lu_(i, k)) > fabs(lu_(p, k))) p = i;
      if (p != k) {
        std::swap(perm_[p], perm_[k]);
        std::swap(row_scale[p], row_scale[k]);
        for (int j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
        sign_ = -sign_;
      }
      if (fabs(lu_(k, k)) <= row_scale[k] * T(n) * eps()) {
        singular_ = true;
        continue;
      }
      for (int i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        for (int j = k + 1; j < n; ++j) lu_(i, j) -= lu_(i, k) * lu_(k, j);
      }
    }
  }

  bool singular() const { return singular_; }
  int size() const { return lu_.rows(); }

  std::vector<T> solve(const std::vector<T>& b) const {
    if (singular_) throw SingularMatrix("Lu::solve: pivot below floor");
    const int n = size();
    std::vector<T> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

  // Solve A^T x = b (used by the 1-norm condition estimator).
  std::vector<T> solve_transpose(const std::vector<T>& b) const {
    if (singular_) throw SingularMatrix("Lu::solve_transpose: pivot below floor");
    const int n = size();
    std::vector<T> y = b;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) y[i] -= lu_(j, i) * y[j];
      y[i] /= lu_(i, i);
    }
    for (int i = n - 1; i >= 0; --i)
      for (int j = i + 1; j < n; ++j) y[i] -= lu_(j, i) * y[j];
    std::vector<T> x(n);
    for (int i = 0; i < n; ++i) x[perm_[i]] = y[i];
    return x;
  }

  T log_abs_det() const {
    using std::fabs;
    using std::log;
    if (singular_) throw SingularMatrix("Lu::log_abs_det: singular matrix");
    T s(0);
    for (int i = 0; i < size(); ++i) s += log(fabs(lu_(i, i)));
    return s;
  }

  int det_sign() const {
    int s = sign_;
    for (int i = 0; i < size(); ++i)
      if (lu_(i, i) < T(0)) s = -s;
    return s;
  }

  // Hager-style estimate of ||A^{-1}||_1 from the existing factors.
  T inverse_norm_1_estimate() const {
    using std::fabs;
    const int n = size();
    if (singular_) return std::numeric_limits<double>::infinity();
    std::vector<T> v(n, T(1) / T(n));
    T est(0);
    for (int iter = 0; iter < 5; ++iter) {
      std::vector<T> y = solve(v);
      T norm(0);
      for (const T& yi : y) norm += fabs(yi);
      std::vector<T> xi(n);
      for (int i = 0; i < n; ++i) xi[i] = y[i] >= T(0) ? T(1) : T(-1);
      std::vector<T> z = solve_transpose(xi);
      int jmax = 0;
      for (int j = 1; j < n; ++j)
        if (fabs(z[j]) > fabs(z[jmax])) jmax = j;
      if (norm <= est) break;
      est = norm;
      if (fabs(z[jmax]) <= std::inner_product(z.begin(), z.end(), v.begin(), T(0)))
        break;
      std::fill(v.begin(), v.end(), T(0));
      v[jmax] = T(1);
    }
    return est;
  }

 private:
  static T eps() {
    if constexpr (std::is_same_v<T, double>)
      return std::numeric_limits<double>::epsilon();
    else
      return std::numeric_limits<double>::min();  // extended types: tiny floor
  }

  Matrix<T> lu_;
  std::vector<int> perm_;
  int sign_ = 1;
  bool singular_ = false;
};

// 1-norm condition estimate; exact norm of A, Hager estimate of A^{-1}.
inline double condition_estimate(const Matrix<double>& a) {
  Lu<double> lu(a);
  if (lu.singular()) return std::numeric_limits<double>::infinity();
  return a.norm_1() * lu.inverse_norm_1_estimate();
}

struct SolveResult {
  std::vector<double> x;
  double condition = 0.0;
  int precision_bits = 53;  // 53 = native double
};

// Solve A x = b under a precision policy. Escalates to extended precision
// when the condition estimate crosses the policy threshold (auto_escalate)
// or when the policy demands extended mode outright.
SolveResult solve_linear(const Matrix<double>& a, const std::vector<double>& b,
                         const PrecisionPolicy& policy = {});

// Extended-precision solve, result rounded back to double. bits >= 64.
std::vector<double> solve_linear_extended(const Matrix<double>& a,
                                          const std::vector<double>& b, int bits);

// Composite Simpson on uniformly spaced samples (odd or even count; the last
// interval falls back to a trapezoid when the count is even).
inline double simpson(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size());
  if (n < 3) throw InvalidParams("simpson: need at least 3 samples");
  const int m = (n % 2 == 1) ? n : n - 1;
  double s = f[0] + f[m - 1];
  for (int i = 1; i < m - 1; i += 2) s += 4.0 * f[i];
  for (int i = 2; i < m - 1; i += 2) s += 2.0 * f[i];
  s *= h / 3.0;
  if (n % 2 == 0) s += 0.5 * h * (f[n - 2] + f[n - 1]);
  return s;
}

}  // namespace invspec
