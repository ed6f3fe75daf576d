#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "invspec/spectrum.hpp"

using namespace invspec;

TEST_CASE("from_energies sorts kappas descending") {
  const Spectrum s = Spectrum::from_energies({-4, -8, -15, -16, -23, -42});
  const std::vector<double> expect = {std::sqrt(42.0), std::sqrt(23.0), 4.0,
                                      std::sqrt(15.0), std::sqrt(8.0), 2.0};
  REQUIRE(s.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(s.kappas()[i] == doctest::Approx(expect[i]).epsilon(1e-15));
}

TEST_CASE("from_energies single state") {
  const Spectrum s = Spectrum::from_energies({-1.0});
  CHECK(s.kappas() == std::vector<double>{1.0});
}

TEST_CASE("from_energies rejects bad input") {
  CHECK_THROWS_AS(Spectrum::from_energies({-4, -4}), DegenerateSpectrum);
  CHECK_THROWS_AS(Spectrum::from_energies({-1, 0.0}), NonNegativeEnergy);
  CHECK_THROWS_AS(Spectrum::from_energies({1.0}), NonNegativeEnergy);
  CHECK_THROWS_AS(Spectrum::from_energies({}), InvalidParams);
  CHECK_THROWS_AS(
      Spectrum::from_energies({-1, -2, -3, -4, -5, -6, -7, -8, -9}),
      TooManyStates);
}

TEST_CASE("energy view round trip") {
  const std::vector<double> e = {-42, -23, -16, -15, -8, -4};
  const Spectrum s = Spectrum::from_energies(e);
  const Spectrum s2 = Spectrum::from_energies(s.energies());
  CHECK(s == s2);
  const auto back = s.energies();
  for (int i = 0; i < 6; ++i)
    CHECK(back[i] == doctest::Approx(e[i]).epsilon(1e-14));
}

TEST_CASE("permutation of input energies is irrelevant") {
  std::vector<double> e = {-1.5, -3.25, -7.0, -0.5};
  std::mt19937 rng(12345);
  const Spectrum ref = Spectrum::from_energies(e);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(e.begin(), e.end(), rng);
    CHECK(Spectrum::from_energies(e) == ref);
  }
}

TEST_CASE("presets match the published level sets") {
  const auto isw = make_preset({PresetKind::isw}).energies();
  CHECK(isw == std::vector<double>{-25, -22, -17, -10});

  const auto hyd = make_preset({PresetKind::hydrogen}).energies();
  CHECK(hyd[0] == doctest::Approx(-13.6).epsilon(1e-14));
  CHECK(hyd[1] == doctest::Approx(-3.4).epsilon(1e-14));
  CHECK(hyd[2] == doctest::Approx(-13.6 / 9.0).epsilon(1e-14));
  CHECK(hyd[3] == doctest::Approx(-0.85).epsilon(1e-14));

  const auto lost = make_preset({PresetKind::lost}).energies();
  CHECK(lost == std::vector<double>{-42, -23, -16, -15, -8, -4});

  const auto sho = make_preset({PresetKind::sho}).energies();
  CHECK(sho == std::vector<double>{-9, -7, -5, -3});
  for (size_t i = 1; i < sho.size(); ++i)
    CHECK(sho[i] - sho[i - 1] == doctest::Approx(2.0));  // spacing fixed by k = 2

  const auto pow4 = make_preset({PresetKind::power}).energies();
  REQUIRE(pow4.size() == 5);
  CHECK(pow4.back() == doctest::Approx(-1.0).epsilon(1e-14));
  // levels scale like n^4 relative to the well bottom
  const double off = -26.0, s = (-1.0 - off) / 625.0;
  for (int n = 1; n <= 5; ++n)
    CHECK(pow4[n - 1] == doctest::Approx(off + s * std::pow(n, 4)).epsilon(1e-13));
}

TEST_CASE("every preset is a valid all-negative spectrum") {
  for (const std::string& name : preset_names()) {
    Preset p;
    p.kind = preset_from_name(name);
    const Spectrum s = make_preset(p);
    for (double e : s.energies()) CHECK(e < 0.0);
    for (size_t i = 0; i + 1 < s.kappas().size(); ++i)
      CHECK(s.kappas()[i] > s.kappas()[i + 1]);
  }
}

TEST_CASE("preset rejects an offset that floods a level") {
  Preset p;
  p.kind = PresetKind::isw;
  p.offset = -10.0;  // -10 + 16 > 0
  CHECK_THROWS_AS(make_preset(p), InvalidParams);
}

TEST_CASE("unknown preset name") {
  CHECK_THROWS_AS(preset_from_name("square"), InvalidParams);
}

TEST_CASE("length calibration") {
  // pion in the L = pi well: hbar c = 197 MeV fm vs sqrt(2 * 140) MeV q
  CHECK(calibrate_length(197.0, std::sqrt(2.0 * 140.0)) ==
        doctest::Approx(11.8).epsilon(3e-3));
  // hydrogen: k e^2 = 1.44 eV nm vs sqrt(4 * 13.6) eV r
  CHECK(calibrate_length(1.44, std::sqrt(4.0 * 13.6)) ==
        doctest::Approx(0.195).epsilon(3e-3));
  CHECK(calibrate_length(3.5, 3.5) == 1.0);
  CHECK_THROWS_AS(calibrate_length(-1.0, 2.0), NonPositiveInput);
  CHECK_THROWS_AS(calibrate_length(1.0, 0.0), NonPositiveInput);
}
