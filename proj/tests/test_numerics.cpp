#include <cmath>
#include <random>

#include "doctest.h"
#include "invspec/numerics.hpp"

using namespace invspec;

namespace {

// Independent oracle for the normalization constants: the Eq.-style product,
// evaluated directly.
std::vector<double> c_sq_product(const std::vector<double>& k) {
  std::vector<double> out(k.size());
  for (size_t n = 0; n < k.size(); ++n) {
    double p = 2.0 * k[n];
    for (size_t m = 0; m < k.size(); ++m)
      if (m != n) p *= std::fabs((k[m] + k[n]) / (k[m] - k[n]));
    out[n] = p;
  }
  return out;
}

double residual_inf(const Matrix<double>& a, const std::vector<double>& x,
                    const std::vector<double>& b) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double r = -b[i];
    for (int j = 0; j < a.cols(); ++j) r += a(i, j) * x[j];
    num = std::max(num, std::fabs(r));
    den = std::max(den, std::fabs(b[i]));
  }
  return den > 0 ? num / den : num;
}

}  // namespace

TEST_CASE("grid basics") {
  const Grid g(-8, 8, 1601);
  CHECK(g.h() == doctest::Approx(0.01));
  CHECK(g.x(0) == -8.0);
  CHECK(g.x(1600) == doctest::Approx(8.0));
  CHECK_THROWS_AS(Grid(1, -1, 100), InvalidParams);
  CHECK_THROWS_AS(Grid(0, 1, 3), InvalidParams);
}

TEST_CASE("solve_linear identity and 1x1") {
  Matrix<double> eye = Matrix<double>::identity(3);
  const std::vector<double> b = {1.5, -2.0, 7.0};
  CHECK(solve_linear(eye, b).x == b);

  Matrix<double> one(1, 1, 2.0);
  const SolveResult r = solve_linear(one, {6.0});
  CHECK(r.x[0] == doctest::Approx(3.0));
  CHECK(r.precision_bits == 53);
}

TEST_CASE("Cauchy Q system reproduces the normalization constants") {
  // Q_nv = 1/(k_n + k_v), Q d = -1; |d_n| matches the product formula, with
  // an alternating sign starting negative on the ground state.
  const std::vector<double> k = {4, 3, 2, 1};
  Matrix<double> q(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q(i, j) = 1.0 / (k[i] + k[j]);
  const std::vector<double> rhs(4, -1.0);
  const std::vector<double> d = solve_linear(q, rhs).x;
  const std::vector<double> oracle = c_sq_product(k);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::fabs(d[i]) == doctest::Approx(oracle[i]).epsilon(1e-9));
    CHECK(std::signbit(d[i]) == (i % 2 == 0));
  }
}

TEST_CASE("singular matrix is rejected") {
  Matrix<double> a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 2; a(1, 1) = 4;
  CHECK_THROWS_AS(solve_linear(a, {1.0, 2.0}), SingularMatrix);
  CHECK(condition_estimate(a) == std::numeric_limits<double>::infinity());
}

TEST_CASE("condition estimate") {
  CHECK(condition_estimate(Matrix<double>::identity(5)) == doctest::Approx(1.0));
  Matrix<double> d(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-14;
  CHECK(condition_estimate(d) == doctest::Approx(1e14).epsilon(1e-6));
}

TEST_CASE("well-conditioned solves meet the residual budget") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Matrix<double> a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = u(rng);
      a(i, i) += n;  // diagonally dominant, keeps the condition modest
    }
    if (condition_estimate(a) >= 1e8) continue;
    std::vector<double> b(n);
    for (double& v : b) v = u(rng);
    CHECK(residual_inf(a, solve_linear(a, b).x, b) <= 1e-10);
  }
}

TEST_CASE("escalated solve is never worse than native") {
  // 8x8 Hilbert matrix: condition ~1e10.
  const int n = 8;
  Matrix<double> h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 1.0 / (i + j + 1);
  std::vector<double> b(n, 1.0);

  const std::vector<double> native = solve_linear(h, b).x;

  PrecisionPolicy esc;
  esc.auto_escalate = true;
  esc.condition_threshold = 1e6;
  const SolveResult ext = solve_linear(h, b, esc);
  CHECK(ext.precision_bits >= 256);
  CHECK(residual_inf(h, ext.x, b) <= residual_inf(h, native, b) + 1e-16);
}

TEST_CASE("explicit extended mode reports its bits") {
  Matrix<double> a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
  const SolveResult r = solve_linear(a, {1.0, 2.0}, PrecisionPolicy::extended(320));
  CHECK(r.precision_bits == 320);
  CHECK(residual_inf(a, r.x, {1.0, 2.0}) < 1e-15);
}

TEST_CASE("simpson integrates sin over a half period") {
  const int n = 1001;
  std::vector<double> f(n);
  const double h = M_PI / (n - 1);
  for (int i = 0; i < n; ++i) f[i] = std::sin(i * h);
  CHECK(simpson(f, h) == doctest::Approx(2.0).epsilon(1e-10));
}
