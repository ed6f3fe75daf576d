#include <cmath>

#include "doctest.h"
#include "invspec/marchenko.hpp"
#include "invspec/scattering.hpp"

using namespace invspec;

namespace {

const Grid kGrid(-8, 8, 1601);

BoundStateSet states_for(const Spectrum& s) {
  return bound_states(s, norm_constants(s), kGrid, PrecisionPolicy::native_auto());
}

}  // namespace

TEST_CASE("free particle: plane wave, unit transmission, zero residual") {
  const ScatteringState st = free_scattering_state(2.0, kGrid);
  const double k = std::sqrt(2.0);
  for (int i = 0; i < kGrid.n_points; i += 100) {
    const std::complex<double> expect = std::exp(std::complex<double>(0, k * kGrid.x(i)));
    CHECK(std::abs(st.psi[i] - expect) < 1e-14);
  }
  CHECK(transmission(st) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(scattering_residual(std::vector<double>(kGrid.n_points, 0.0), st) < 1e-8);
  CHECK(reflection_fit(st).ratio < 1e-12);
}

TEST_CASE("N = 1 closed form") {
  const Spectrum s = Spectrum::from_kappas({1.0});
  const BoundStateSet st = states_for(s);

  SUBCASE("Psi(0, E=1) = (1+i)/2") {
    const ScatteringState sc = scattering_state(s, st, 1.0);
    const std::complex<double> at0 = sc.psi[800];
    CHECK(at0.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at0.imag() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::norm(at0) == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("matches (ik - tanh x)/(1 + ik) e^{ikx} everywhere") {
    for (double e : {0.5, 1.0, 5.0, 20.0}) {
      const double k = std::sqrt(e);
      const ScatteringState sc = scattering_state(s, st, e);
      double worst = 0.0;
      for (int i = 0; i < kGrid.n_points; ++i) {
        const double x = kGrid.x(i);
        const std::complex<double> closed =
            (std::complex<double>(0, k) - std::tanh(x)) /
            std::complex<double>(1, k) * std::exp(std::complex<double>(0, k * x));
        worst = std::max(worst, std::abs(sc.psi[i] - closed));
      }
      CHECK(worst < 1e-8);
    }
  }

  SUBCASE("closed-form transmission is exactly unity in modulus") {
    // |(ik - kappa)/(kappa + ik)|^2 = 1 for any kappa, E
    for (double kappa : {0.5, 1.0, 3.7})
      for (double e : {0.5, 5.0}) {
        const double k = std::sqrt(e);
        const std::complex<double> amp =
            (std::complex<double>(0, k) - kappa) / std::complex<double>(kappa, k);
        CHECK(std::norm(amp) == doctest::Approx(1.0).epsilon(1e-15));
      }
  }
}

TEST_CASE("rejects non-positive energy") {
  const Spectrum s = Spectrum::from_kappas({1.0});
  const BoundStateSet st = states_for(s);
  CHECK_THROWS_AS(scattering_state(s, st, 0.0), NonPositiveEnergy);
  CHECK_THROWS_AS(scattering_state(s, st, -2.0), NonPositiveEnergy);
  CHECK_THROWS_AS(free_scattering_state(-1.0, kGrid), NonPositiveEnergy);
}

TEST_CASE("lost preset: transmission within finite-tail error at E = 5") {
  Preset p;
  p.kind = PresetKind::lost;
  const Spectrum s = make_preset(p);
  const BoundStateSet st = states_for(s);
  const ScatteringState sc = scattering_state(s, st, 5.0);
  CHECK(transmission(sc) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(transmission_tail_bound(s, kGrid) < 1e-3);
  CHECK(reflection_fit(sc).ratio < 1e-3);
}

TEST_CASE("SHO preset: scattering residual at E = 2") {
  Preset p;
  p.kind = PresetKind::sho;
  const Spectrum s = make_preset(p);
  const NormConstants c = norm_constants(s);
  const BoundStateSet st = states_for(s);
  std::vector<double> v(kGrid.n_points);
  for (int i = 0; i < kGrid.n_points; ++i) v[i] = potential(s, c, kGrid.x(i));
  const ScatteringState sc = scattering_state(s, st, 2.0);
  CHECK(scattering_residual(v, sc) < 1e-4);
}

TEST_CASE("unitarity and phase-only distortion across presets") {
  for (const std::string& name : {"sho", "isw", "hydrogen"}) {
    Preset p;
    p.kind = preset_from_name(name);
    const Spectrum s = make_preset(p);
    const BoundStateSet st = states_for(s);
    for (double e : {0.5, 20.0}) {
      const ScatteringState sc = scattering_state(s, st, e);
      CHECK(transmission(sc) == doctest::Approx(1.0).epsilon(1e-3));
      CHECK(std::abs(std::abs(sc.psi.back()) - std::abs(sc.psi.front())) < 1e-3);
    }
  }
}
