#include "alemass/homcalc.hpp"
#include "alemass/lebrun.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace alemass;
using Catch::Approx;

TEST_CASE("hyperbolic-ansatz potential: frozen value", "[lebrun]") {
  // ell = 2, evaluation distance r0 = 1, one marked point at distance 1:
  // V = 1 + 2/(e^2 - 1) + 1/(e^2 - 1).
  const LebrunFamily f = make_lebrun_family(2, {1.0});
  CHECK(potential_V(f, 1.0, {1.0}) == Approx(1.469552928248997).epsilon(1e-14));
  CHECK_THROWS_AS(potential_V(f, 1.0, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(potential_V(f, -1.0, {1.0}), std::invalid_argument);
}

TEST_CASE("curve areas: base pi, exceptional 2 pi/(e^{2r}-1)", "[lebrun]") {
  const double r = 0.5 * std::log(5.0);  // e^{2r} - 1 = 4
  const LebrunFamily f = make_lebrun_family(3, {r});
  const CurveAreas ca = curve_areas(f);
  CHECK(ca.base_curve == Approx(std::numbers::pi).epsilon(1e-15));
  REQUIRE(ca.exceptional.size() == 1);
  CHECK(ca.exceptional[0] == Approx(std::numbers::pi / 2.0).epsilon(1e-13));
}

TEST_CASE("zero-mass instances are exactly zero", "[lebrun]") {
  for (int ell = 3; ell <= 10; ++ell) {
    const LebrunFamily f = zero_mass_instance(ell);
    REQUIRE(f.expansion.size() == static_cast<std::size_t>(ell - 2));
    for (double e : f.expansion) CHECK(e == 4.0);  // stored exactly
    CHECK(closed_form_mass(f) == 0.0);             // exact IEEE zero
  }
  CHECK_THROWS_AS(zero_mass_instance(2), std::invalid_argument);
}

TEST_CASE("base family masses (2-ell)/(3 ell)", "[lebrun]") {
  CHECK(closed_form_mass(make_lebrun_family(3, {})) == Approx(-1.0 / 9.0).epsilon(1e-15));
  CHECK(closed_form_mass(make_lebrun_family(4, {})) == Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(closed_form_mass(make_lebrun_family(1, {})) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(closed_form_mass(make_lebrun_family(2, {})) == 0.0);
}

TEST_CASE("closed form equals the intersection-theoretic mass", "[lebrun]") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> rdraw(0.05, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int ell = 1 + static_cast<int>(rng() % 8);
    std::vector<double> dist(rng() % 4);
    for (auto& d : dist) d = rdraw(rng);
    const LebrunFamily f = make_lebrun_family(ell, dist);
    const CurveAreas ca = curve_areas(f);
    CHECK(closed_form_mass(f) ==
          Approx(mass_oell_on_section(ell, ca.base_curve, ca.exceptional)).margin(1e-14));
  }
}

TEST_CASE("equal-distance family: frozen value and exact zero", "[lebrun]") {
  CHECK(equal_distance_mass(4, 1, 0.3) == Approx(0.23878973838695693).epsilon(1e-13));
  // One point at half-log-5 distance balances ell = 3 exactly.
  CHECK(equal_distance_mass(3, 1, 0.5 * std::log(5.0)) == Approx(0.0).margin(1e-15));
}

TEST_CASE("mass changes sign exactly at the predicted radius", "[lebrun]") {
  for (int ell : {3, 4, 7}) {
    const double rstar = sign_change_radius(ell);
    const double below = equal_distance_mass(ell, 1, rstar - 0.01);
    const double above = equal_distance_mass(ell, 1, rstar + 0.01);
    CHECK(equal_distance_mass(ell, 1, rstar) == Approx(0.0).margin(1e-13));
    CHECK(below > 0.0);  // closer point -> larger area -> positive mass
    CHECK(above < 0.0);
  }
  CHECK(sign_change_radius(3) == Approx(0.80471895621705019).epsilon(1e-14));
  CHECK(sign_change_radius(4) == Approx(0.54930614433405485).epsilon(1e-14));
  CHECK_THROWS_AS(sign_change_radius(2), std::invalid_argument);
}

TEST_CASE("mass is monotone decreasing in each point distance", "[lebrun]") {
  double prev = std::numeric_limits<double>::infinity();
  for (double r : {0.3, 0.6, 1.2, 2.4}) {
    const double m = equal_distance_mass(5, 2, r);
    CHECK(m < prev);
    prev = m;
  }
}

TEST_CASE("family construction guards", "[lebrun]") {
  CHECK_THROWS_AS(make_lebrun_family(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_lebrun_family(3, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_lebrun_family(3, {0.0}), std::invalid_argument);
}
