#include "alemass/admint.hpp"
#include "alemass/metrics.hpp"
#include "alemass/radial_kahler.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace alemass;
using Catch::Approx;

TEST_CASE("normalization constant values and the defining identity", "[admint]") {
  CHECK(adm_normalization(3) == Approx(0.019894367886486917).epsilon(1e-15));  // 1/(16 pi)
  CHECK(adm_normalization(4) == Approx(0.0084434319701948143).epsilon(1e-15));
  CHECK(adm_normalization(5) == Approx(0.004749430483234583).epsilon(1e-15));
  CHECK(adm_normalization(6) == Approx(0.0032251534433199489).epsilon(1e-15));
  // C_n (n-1) Vol(S^{n-1}) = 1/2 pins the constant against the area
  // normalization actually used by the quadrature.
  for (int n = 3; n <= 8; ++n)
    CHECK(adm_normalization(n) * (n - 1) * sphere_area(n) == Approx(0.5).epsilon(1e-13));
  CHECK_THROWS_AS(adm_normalization(2), std::invalid_argument);
}

TEST_CASE("flat chart has exactly zero surface integral", "[admint]") {
  for (int n : {3, 5}) {
    const MetricChart c = euclidean_chart(n);
    const SphereGrid grid = SphereGrid::product_gauss(n, 8);
    for (double rho : {1.0, 50.0})
      CHECK(mass_at_radius(c, rho, grid) == Approx(0.0).margin(1e-13));
  }
}

TEST_CASE("finite-radius mass matches the closed form M/(1 - A rho^{2-n})", "[admint]") {
  for (const auto& [n, a] : std::vector<std::pair<int, double>>{{3, 2.0}, {4, 1.0}, {5, 4.0}}) {
    const MetricChart c = schwarzschild_chart(n, a);
    const SphereGrid grid = SphereGrid::product_gauss(n, 12);
    for (double rho : {20.0, 40.0}) {
      const double closed = 0.5 * a / (1.0 - a * std::pow(rho, 2.0 - n));
      CHECK(mass_at_radius(c, rho, grid) == Approx(closed).epsilon(1e-10));
    }
  }
  // The percent-level finite-radius bias at rho = 100 (n=3, A=2).
  const MetricChart c = schwarzschild_chart(3, 2.0);
  const SphereGrid grid = SphereGrid::product_gauss(3, 12);
  CHECK(mass_at_radius(c, 100.0, grid) == Approx(1.0204081632653061).epsilon(1e-10));
}

TEST_CASE("extrapolated mass hits A/2 and reports the right tail", "[admint]") {
  const MetricChart c = schwarzschild_chart(3, 2.0);
  const auto schedule = make_schedule(16.0);
  const MassEstimate est = adm_mass(c, schedule);
  CHECK(est.value == Approx(1.0).margin(1e-7));
  CHECK(est.converged);
  CHECK(est.decay_exponent == Approx(1.0).epsilon(1e-12));  // 2 tau - (n-2) with tau = n-2
  REQUIRE(est.samples.size() == schedule.size());
  CHECK(est.error_estimate < 1e-6);

  // Fitted tail exponent from the samples themselves: p = n-2 = 1.
  const double p = fit_decay_exponent(est.radii, est.samples);
  CHECK(p == Approx(1.0).margin(0.15));
}

TEST_CASE("quotient order scales the mass definitionally", "[admint]") {
  const MetricChart c = schwarzschild_chart(3, 2.0);
  const SphereGrid grid = SphereGrid::product_gauss(3, 8);
  const double m1 = mass_at_radius(c, 30.0, grid);
  const double m4 = mass_at_radius(c.with_gamma_order(4), 30.0, grid);
  CHECK(m1 == Approx(4.0 * m4).epsilon(1e-14));
}

TEST_CASE("convention hooks flip the sign and drop the quotient", "[admint]") {
  const MetricChart c = schwarzschild_chart(3, 2.0);
  const SphereGrid grid = SphereGrid::product_gauss(3, 8);
  MassConventions flip;
  flip.normalization_sign = -1.0;
  CHECK(mass_at_radius(c, 30.0, grid, flip) ==
        Approx(-mass_at_radius(c, 30.0, grid)).epsilon(1e-14));
  MassConventions noq;
  noq.use_gamma_quotient = false;
  CHECK(mass_at_radius(c.with_gamma_order(4), 30.0, grid, noq) ==
        Approx(mass_at_radius(c, 30.0, grid)).epsilon(1e-14));
}

TEST_CASE("grid refinement does not move the answer", "[admint]") {
  const MetricChart c = schwarzschild_chart(4, 1.0);
  const SphereGrid g12 = SphereGrid::product_gauss(4, 12);
  const SphereGrid g20 = SphereGrid::product_gauss(4, 20);
  CHECK(mass_at_radius(c, 25.0, g12) == Approx(mass_at_radius(c, 25.0, g20)).epsilon(1e-11));
}

TEST_CASE("schedule construction and validation", "[admint]") {
  const auto s = make_schedule(10.0, 5, 2.0);
  REQUIRE(s.size() == 5);
  CHECK(s.front() == 10.0);
  CHECK(s.back() == Approx(160.0));
  CHECK_THROWS_AS(make_schedule(10.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_schedule(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_schedule(10.0, 8, 1.0), std::invalid_argument);

  const MetricChart c = schwarzschild_chart(3, 2.0);
  CHECK_THROWS_AS(adm_mass(c, {1.0, 2.0, 4.0}), std::invalid_argument);   // inside inner radius
  CHECK_THROWS_AS(adm_mass(c, {20.0, 10.0, 40.0}), std::invalid_argument);  // not increasing
}

TEST_CASE("non-convergence is a flagged result, not an exception", "[admint]") {
  const MetricChart c = schwarzschild_chart(3, 2.0);
  AdmOptions opt;
  opt.tolerance = 0.0;  // unreachable on purpose
  const MassEstimate est = adm_mass(c, make_schedule(16.0), opt);
  CHECK_FALSE(est.converged);
  CHECK(est.value == Approx(1.0).margin(1e-6));  // the number is still right
}

TEST_CASE("power-law extrapolation on synthetic ladders", "[admint]") {
  // m(rho) = 3 + 5 rho^-2 + 7 rho^-4: the tableau must recover 3 almost
  // exactly from 8 geometric radii.
  std::vector<double> radii = make_schedule(5.0, 8, std::numbers::sqrt2);
  std::vector<double> vals;
  for (double r : radii) vals.push_back(3.0 + 5.0 / (r * r) + 7.0 / (r * r * r * r));
  const auto rich = extrapolate_power_law(radii, vals, 2.0, ExtrapolationMethod::richardson);
  CHECK(rich.value == Approx(3.0).margin(1e-10));
  const auto pfit = extrapolate_power_law(radii, vals, 2.0, ExtrapolationMethod::power_fit);
  CHECK(pfit.value == Approx(3.0).margin(2e-2));
  CHECK(rich.extrapolants.size() == radii.size());

  // Decay-exponent fit on a clean rho^-2 ladder.
  CHECK(fit_decay_exponent(radii, vals) == Approx(2.0).margin(0.3));
}

TEST_CASE("log-det route agrees with the surface route on a flat Kähler chart",
          "[admint]") {
  const MetricChart flat = radial_kahler_chart(2, radial_potential_flat(), 1e9);
  REQUIRE(flat.kahler_holomorphic);
  const SphereGrid grid = SphereGrid::product_gauss(4, 8);
  CHECK(logdet_mass_at_radius(flat, 10.0, grid) == Approx(0.0).margin(1e-13));
  CHECK(mass_at_radius(flat, 10.0, grid) == Approx(0.0).margin(1e-13));
}

TEST_CASE("log-det route refuses non-holomorphic charts", "[admint]") {
  const MetricChart c = schwarzschild_chart(4, 1.0);
  REQUIRE_FALSE(c.kahler_holomorphic);
  const SphereGrid grid = SphereGrid::product_gauss(4, 8);
  CHECK_THROWS_AS(logdet_mass_at_radius(c, 20.0, grid), std::invalid_argument);
  CHECK_THROWS_AS(kahler_logdet_mass(c, make_schedule(16.0)), std::invalid_argument);
}

TEST_CASE("the two routes and the closed form agree on the blow-up model", "[admint]") {
  // F = u + A log u (m = 2): the surface integrand is exactly 2A/rho^3,
  // so the finite-radius mass is A/3 at every radius; the log-det route
  // climbs the (1 + A/u)^{-1} ladder to the same limit.
  for (double a : {0.5, 2.0}) {
    const MetricChart c = burns_type_chart(a);
    const SphereGrid grid = SphereGrid::product_gauss(4, 12);
    for (double rho : {10.0, 20.0})
      CHECK(mass_at_radius(c, rho, grid) == Approx(a / 3.0).epsilon(1e-10));

    const auto schedule = make_schedule(10.0);
    const MassEstimate adm = adm_mass(c, schedule);
    const MassEstimate logdet = kahler_logdet_mass(c, schedule);
    CHECK(adm.value == Approx(a / 3.0).margin(1e-9));
    CHECK(logdet.value == Approx(a / 3.0).margin(1e-8));
    CHECK(adm.converged);
    CHECK(logdet.converged);
    // Finite-radius log-det value matches its own closed form.
    const double u = 100.0;  // rho = 10
    CHECK(logdet_mass_at_radius(c, 10.0, grid) ==
          Approx((a / 3.0) / (1.0 + a / u)).epsilon(1e-9));
  }
}
