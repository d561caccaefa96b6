#include "alemass/quadrature.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace alemass;
using Catch::Approx;

TEST_CASE("sphere surface areas", "[quadrature]") {
  CHECK(sphere_area(3) == Approx(12.566370614359173).epsilon(1e-15));
  CHECK(sphere_area(4) == Approx(19.739208802178717).epsilon(1e-15));
  CHECK(sphere_area(5) == Approx(26.318945069571623).epsilon(1e-15));
  CHECK(sphere_area(6) == Approx(31.00627668029982).epsilon(1e-15));
}

TEST_CASE("grid weights sum to the sphere area", "[quadrature]") {
  for (int n : {3, 4, 5, 6}) {
    for (int order : {4, 8, 12, 20}) {
      const SphereGrid grid = SphereGrid::product_gauss(n, order);
      CHECK(grid.weight_sum() == Approx(sphere_area(n)).epsilon(1e-12));
      REQUIRE(grid.size() > 0);
      for (std::size_t i = 0; i < grid.size(); i += 7)
        CHECK(grid.node(i).norm() == Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("monomials up to the order are integrated exactly", "[quadrature]") {
  // Closed form: integral of prod x_i^{e_i} over S^{n-1} is
  //   2 prod Gamma(b_i) / Gamma(sum b_i),  b_i = (e_i + 1)/2,
  // and zero when any exponent is odd.
  auto mono = [](const SphereGrid& g, const std::vector<int>& e) {
    return g.integrate([&](const Eigen::VectorXd& x) {
      double p = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i) p *= std::pow(x(static_cast<int>(i)), e[i]);
      return p;
    });
  };
  const SphereGrid g3 = SphereGrid::product_gauss(3, 12);
  CHECK(mono(g3, {2, 4, 6}) == Approx(0.0041846055991872038).epsilon(1e-12));
  CHECK(mono(g3, {0, 0, 0}) == Approx(sphere_area(3)).epsilon(1e-12));
  CHECK(mono(g3, {1, 2, 4}) == Approx(0.0).margin(1e-14));
  CHECK(mono(g3, {3, 0, 0}) == Approx(0.0).margin(1e-14));

  // Against the closed-form helper in higher dimension.
  const SphereGrid g5 = SphereGrid::product_gauss(5, 10);
  const std::vector<int> e5 = {2, 2, 0, 4, 2};
  CHECK(mono(g5, e5) == Approx(monomial_sphere_integral(e5)).epsilon(1e-12));
  const std::vector<int> e5b = {0, 6, 2, 0, 2};
  CHECK(mono(g5, e5b) == Approx(monomial_sphere_integral(e5b)).epsilon(1e-12));
  CHECK(monomial_sphere_integral({1, 0, 0, 0, 0}) == 0.0);
  CHECK_THROWS_AS(monomial_sphere_integral({-2, 0}), std::invalid_argument);
}

TEST_CASE("integration is deterministic (pairwise summation)", "[quadrature]") {
  const SphereGrid g = SphereGrid::product_gauss(4, 16);
  auto f = [](const Eigen::VectorXd& x) { return std::sin(3.0 * x(0)) + x(1) * x(1) * x(2); };
  const double a = g.integrate(f);
  const double b = g.integrate(f);
  CHECK(a == b);  // bitwise equal
}

TEST_CASE("rotated grids integrate polynomials identically", "[quadrature]") {
  const SphereGrid g = SphereGrid::product_gauss(4, 12);
  // A rotation in the (0,2) plane.
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(4, 4);
  const double c = std::cos(0.7), s = std::sin(0.7);
  r(0, 0) = c;
  r(0, 2) = -s;
  r(2, 0) = s;
  r(2, 2) = c;
  const SphereGrid gr = g.rotated(r);

  auto f = [](const Eigen::VectorXd& x) {
    return 1.0 + x(0) * x(0) - 2.0 * x(1) * x(3) + x(2) * x(2) * x(2) * x(2);
  };
  CHECK(gr.integrate(f) == Approx(g.integrate(f)).epsilon(1e-12));
  CHECK(gr.weight_sum() == Approx(sphere_area(4)).epsilon(1e-12));
  CHECK_THROWS_AS(g.rotated(Eigen::MatrixXd::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("pairwise summation matches extended-precision accumulation", "[quadrature]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  std::vector<double> xs(10001);
  long double ref = 0.0L;
  for (auto& x : xs) {
    x = draw(rng);
    ref += static_cast<long double>(x);
  }
  CHECK(pairwise_sum(xs) == Approx(static_cast<double>(ref)).margin(1e-12));
}

TEST_CASE("grid construction guards", "[quadrature]") {
  CHECK_THROWS_AS(SphereGrid::product_gauss(1, 8), std::invalid_argument);
  CHECK_THROWS_AS(SphereGrid::product_gauss(4, 0), std::invalid_argument);
}
