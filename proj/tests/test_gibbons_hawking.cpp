#include "alemass/admint.hpp"
#include "alemass/gibbons_hawking.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace alemass;
using Catch::Approx;

namespace {

Eigen::Vector4d random_x(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  Eigen::Vector4d x(draw(rng), draw(rng), draw(rng), draw(rng));
  return scale * x.normalized();
}

}  // namespace

TEST_CASE("fibration identity dK.dK + beta beta^T = |x|^2 I", "[gh]") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector4d x = random_x(rng, 1.0 + 5.0 * trial / 19.0);
    const auto j = gh_detail::fibration_jacobian(x);
    const Eigen::Vector4d b = gh_detail::beta_form(x);
    const Eigen::Matrix4d lhs = j.transpose() * j + b * b.transpose();
    const double rho2 = x.squaredNorm();
    CHECK((lhs - rho2 * Eigen::Matrix4d::Identity()).norm() ==
          Approx(0.0).margin(1e-12 * rho2));
    // |K| = |x|^2 / 2.
    CHECK(gh_detail::fibration(x).norm() == Approx(0.5 * rho2).epsilon(1e-13));
  }
}

TEST_CASE("single center at the origin is the identity chart", "[gh]") {
  GibbonsHawkingData data;
  data.centers = {Eigen::Vector3d::Zero()};
  const MetricChart c = gibbons_hawking_chart(data);
  CHECK(c.n == 4);
  CHECK(c.gamma_order == 1);
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Vector4d x = random_x(rng, c.inner_radius * (1.5 + trial));
    Eigen::VectorXd xv = x;
    if (!c.admissible(xv)) continue;
    CHECK((c.g(xv) - Eigen::Matrix4d::Identity()).norm() == Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("monopole potential satisfies curl(w) = grad(c/r)", "[gh]") {
  const auto frame = gh_detail::make_frame(Eigen::Vector3d(0.2, -0.3, 1.0).normalized());
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  const double c = 0.5;
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::Vector3d u(draw(rng), draw(rng), draw(rng));
    u *= (0.5 + 3.0 * std::abs(draw(rng))) / u.norm();
    if (u.dot(frame.d) < -0.8 * u.norm()) continue;  // stay off the string tube
    Eigen::Matrix3d jac;
    gh_detail::monopole_potential(u, c, frame, &jac);

    // Analytic Jacobian against finite differences of the potential.
    const double h = 1e-6 * u.norm();
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d up = u, um = u;
      up(k) += h;
      um(k) -= h;
      const Eigen::Vector3d col = (gh_detail::monopole_potential(up, c, frame) -
                                   gh_detail::monopole_potential(um, c, frame)) /
                                  (2.0 * h);
      CHECK((jac.col(k) - col).norm() == Approx(0.0).margin(1e-6));
    }

    // curl from the analytic Jacobian equals grad(c/r) = -c u / r^3.
    const Eigen::Vector3d curl(jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0),
                               jac(1, 0) - jac(0, 1));
    const double r = u.norm();
    const Eigen::Vector3d grad = -c / (r * r * r) * u;
    CHECK((curl - grad).norm() == Approx(0.0).margin(1e-8 * grad.norm() + 1e-14));
  }
}

TEST_CASE("gauge difference curls to grad(V - V_ref)", "[gh]") {
  GibbonsHawkingData data;
  data.centers = {Eigen::Vector3d(0.4, 0.1, -0.2), Eigen::Vector3d(-0.3, 0.2, 0.5)};
  std::mt19937_64 rng(74);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  for (int trial = 0; trial < 15; ++trial) {
    Eigen::Vector3d y(draw(rng), draw(rng), draw(rng));
    y *= (2.0 + 3.0 * std::abs(draw(rng))) / y.norm();
    if (y.dot(data.string_direction) < -0.7 * y.norm()) continue;
    Eigen::Matrix3d jac;
    gibbons_hawking_gauge_difference(data, y, &jac);
    const Eigen::Vector3d curl(jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0),
                               jac(1, 0) - jac(0, 1));

    Eigen::Vector3d grad_v;
    gibbons_hawking_potential(data, y, &grad_v);
    // Reference: single center of the full charge at the origin.
    GibbonsHawkingData ref;
    ref.centers = {Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
    Eigen::Vector3d grad_ref;
    gibbons_hawking_potential(ref, y, &grad_ref);

    CHECK((curl - (grad_v - grad_ref)).norm() == Approx(0.0).margin(1e-10));
  }
}

TEST_CASE("asymptotic chart: fall-off, admissibility, and zero mass", "[gh]") {
  GibbonsHawkingData data;
  data.centers = {Eigen::Vector3d(0.35, -0.2, 0.15), Eigen::Vector3d(-0.25, 0.3, -0.1)};
  const MetricChart c = gibbons_hawking_chart(data);
  CHECK(c.gamma_order == 2);
  CHECK(c.declared_tau == Approx(2.0));

  // Metric deviation decays like rho^-2 along a generic ray.
  Eigen::VectorXd dir(4);
  dir << 0.5, 0.5, 0.5, 0.5;
  const double r0 = 1.5 * c.inner_radius;
  const double slope = decay_slope(c, {r0, 2 * r0, 4 * r0, 8 * r0}, dir);
  CHECK(slope == Approx(-2.0).margin(0.35));

  // Points inside the excluded tube report a typed domain error.
  CHECK_THROWS_AS(c.g(Eigen::VectorXd::Zero(4)), ChartDomainError);

  // Mass: zero within the validation tolerance.
  const MassEstimate est = adm_mass(c, make_schedule(std::max(8.0, 1.3 * c.inner_radius)));
  CHECK(est.value == Approx(0.0).margin(1e-4));
  CHECK(est.converged);
}

TEST_CASE("center permutation does not change the chart", "[gh]") {
  GibbonsHawkingData a, b;
  a.centers = {Eigen::Vector3d(0.3, 0.0, 0.1), Eigen::Vector3d(-0.2, 0.4, 0.0),
               Eigen::Vector3d(0.0, -0.3, 0.2)};
  b.centers = {a.centers[2], a.centers[0], a.centers[1]};
  const MetricChart ca = gibbons_hawking_chart(a);
  const MetricChart cb = gibbons_hawking_chart(b);
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 8; ++trial) {
    Eigen::VectorXd x = random_x(rng, 1.4 * ca.inner_radius);
    if (!ca.admissible(x)) continue;
    CHECK((ca.g(x) - cb.g(x)).norm() == Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("string axis is a gauge choice: the mass is unchanged", "[gh]") {
  GibbonsHawkingData data;
  data.centers = {Eigen::Vector3d(0.4, 0.1, -0.2), Eigen::Vector3d(-0.3, 0.2, 0.5)};
  GibbonsHawkingData tilted = data;
  tilted.string_direction = Eigen::Vector3d(1.0, 1.0, 0.5).normalized();
  const MetricChart c0 = gibbons_hawking_chart(data);
  const MetricChart c1 = gibbons_hawking_chart(tilted);
  const auto schedule = make_schedule(std::max(8.0, 1.3 * c0.inner_radius), 6);
  const MassEstimate m0 = adm_mass(c0, schedule);
  const MassEstimate m1 = adm_mass(c1, schedule);
  CHECK(m0.value == Approx(m1.value).margin(1e-4));
}

TEST_CASE("chart construction guards", "[gh]") {
  GibbonsHawkingData empty;
  CHECK_THROWS_AS(gibbons_hawking_chart(empty), std::invalid_argument);

  GibbonsHawkingData one;
  one.centers = {Eigen::Vector3d(1.0, 0.0, 0.0)};
  CHECK_THROWS_AS(gibbons_hawking_potential(one, Eigen::Vector3d(1.0, 0.0, 0.0)),
                  ChartDomainError);
}
