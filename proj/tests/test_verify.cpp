#include <cmath>

#include "doctest.h"
#include "invspec/marchenko.hpp"
#include "invspec/verify.hpp"

using namespace invspec;

namespace {

const Grid kGrid(-8, 8, 1601);

std::vector<double> sampled_sech2(double kappa) {
  std::vector<double> v(kGrid.n_points);
  for (int i = 0; i < kGrid.n_points; ++i) {
    const double sech = 1.0 / std::cosh(kappa * kGrid.x(i));
    v[i] = -2.0 * kappa * kappa * sech * sech;
  }
  return v;
}

}  // namespace

TEST_CASE("Numerov recovers the single sech^2 bound state") {
  const std::vector<double> eig = numerov_eigenvalues(sampled_sech2(1.0), kGrid, 1);
  REQUIRE(eig.size() == 1u);
  CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("Numerov error cases") {
  CHECK_THROWS_AS(
      numerov_eigenvalues(std::vector<double>(kGrid.n_points, 0.0), kGrid, 1),
      NotEnoughStates);
  // asking for more states than the well supports
  CHECK_THROWS_AS(numerov_eigenvalues(sampled_sech2(1.0), kGrid, 4),
                  NotEnoughStates);
  // tails not decayed on a narrow grid
  const Grid narrow(-2, 2, 401);
  std::vector<double> v(narrow.n_points);
  for (int i = 0; i < narrow.n_points; ++i) {
    const double sech = 1.0 / std::cosh(narrow.x(i));
    v[i] = -2.0 * sech * sech;
  }
  CHECK_THROWS_AS(numerov_eigenvalues(v, narrow, 1), NonDecayedTail);
}

TEST_CASE("round trip on the ISW preset") {
  Preset p;
  p.kind = PresetKind::isw;
  const Spectrum s = make_preset(p);
  const NormConstants c = norm_constants(s);
  std::vector<double> v(kGrid.n_points);
  for (int i = 0; i < kGrid.n_points; ++i) v[i] = potential(s, c, kGrid.x(i));
  const std::vector<double> eig = numerov_eigenvalues(v, kGrid, 4);
  const std::vector<double> expect = {-25, -22, -17, -10};
  for (int i = 0; i < 4; ++i)
    CHECK(eig[i] == doctest::Approx(expect[i]).epsilon(1e-3));
}

TEST_CASE("N = 1 oracle report passes across kappa values") {
  for (double kappa : {0.5, 1.0, 3.7}) {
    const VerificationReport rep = oracle_n1(kappa, kGrid);
    INFO(rep.table());
    CHECK(rep.pass());
  }
}

TEST_CASE("full verify passes for the single-state oracle case") {
  const VerificationReport rep = full_verify(Spectrum::from_kappas({1.0}), kGrid);
  INFO(rep.table());
  CHECK(rep.pass());
}

TEST_CASE("degenerate input fails upstream of verification") {
  CHECK_THROWS_AS(full_verify(Spectrum::from_energies({-4.0, -4.0}), kGrid),
                  DegenerateSpectrum);
}

TEST_CASE("report is deterministic") {
  const Spectrum s = Spectrum::from_kappas({1.0});
  const std::string a = full_verify(s, kGrid).to_json().dump(2);
  const std::string b = full_verify(s, kGrid).to_json().dump(2);
  CHECK(a == b);
  CHECK(a.find("overall_pass") != std::string::npos);
}

TEST_CASE("report aggregation semantics") {
  VerificationReport rep;
  rep.add("ok", 0.5, 1.0);
  CHECK(rep.pass());
  rep.add("bad", 2.0, 1.0);
  CHECK_FALSE(rep.pass());
  rep.add_error("broken", "synthetic");
  CHECK_FALSE(rep.pass());
  CHECK(rep.checks.size() == 3u);
}

TEST_CASE("hydrogen round trip reproduces the Rydberg ratios") {
  Preset p;
  p.kind = PresetKind::hydrogen;
  const Spectrum s = make_preset(p);
  const NormConstants c = norm_constants(s);
  std::vector<double> v(kGrid.n_points);
  for (int i = 0; i < kGrid.n_points; ++i) v[i] = potential(s, c, kGrid.x(i));
  const std::vector<double> eig = numerov_eigenvalues(v, kGrid, 4);
  for (int n = 1; n <= 4; ++n)
    CHECK(eig[n - 1] / eig[0] == doctest::Approx(1.0 / (n * n)).epsilon(1e-3));
}
