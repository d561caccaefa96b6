#pragma once

// U(m)-invariant Kähler metrics from a radial potential F(u), u = |z|^2.
//
// Chart convention (fixed; all mass normalizations depend on it): the
// real Cartesian chart of the potential F is
//   g_jk = F'(u) delta_jk + F''(u) (x x^T + (Jx)(Jx)^T)_jk ,
// where J is the standard complex structure pairing (x1,x2), (x3,x4),...
// With this convention F(u) = u is the identity chart, the Hermitian
// form <.,.> has matrix  F' I + F'' zbar z^T,  the complex eigenvalues
// are (uF')' on the z-line and F' on its orthogonal complement, and
//   det g = [ (uF')' * F'^(m-1) ]^2
// (each complex eigenvalue appears twice among the 2m real ones; the
// Hermitian-convention constant relating det g to the eigenvalue
// product is therefore exactly 1 after taking the square root).

#include "alemass/metrics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace alemass {

// Raised when a radial potential fails to define a metric (F' <= 0 or
// (uF')' <= 0) at an evaluation point.
class PositivityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RadialPotential {
  std::string name;
  std::function<double(double)> f0;  // F(u)
  std::function<double(double)> f1;  // F'(u)
  std::function<double(double)> f2;  // F''(u)
  std::function<double(double)> f3;  // F'''(u)
};

inline RadialPotential radial_potential_flat() {
  return {"flat",
          [](double u) { return u; },
          [](double) { return 1.0; },
          [](double) { return 0.0; },
          [](double) { return 0.0; }};
}

// F = u + A log u : the scalar-flat family on the line bundle O(-1)
// (blow-up of C^2) for A > 0; tangential eigenvalue 1 + A/u, radial 1.
inline RadialPotential radial_potential_log(double a) {
  return {"log",
          [a](double u) { return u + a * std::log(u); },
          [a](double u) { return 1.0 + a / u; },
          [a](double u) { return -a / (u * u); },
          [a](double u) { return 2.0 * a / (u * u * u); }};
}

// F = u + A log u + B/u : non-scalar-flat perturbation used by the
// curvature decay and integrability tests.
inline RadialPotential radial_potential_log_inverse(double a, double b) {
  return {"log-inverse",
          [a, b](double u) { return u + a * std::log(u) + b / u; },
          [a, b](double u) { return 1.0 + a / u - b / (u * u); },
          [a, b](double u) { return -a / (u * u) + 2.0 * b / (u * u * u); },
          [a, b](double u) { return 2.0 * a / (u * u * u) - 6.0 * b / (u * u * u * u); }};
}

struct RadialEigenvalues {
  double radial;      // (uF')' on the complex line through z
  double tangential;  // F' on the orthogonal complement
};

inline RadialEigenvalues radial_eigenvalues(const RadialPotential& pot, double u) {
  const double f1 = pot.f1(u);
  const double rad = f1 + u * pot.f2(u);
  return {rad, f1};
}

inline void require_positive(const RadialPotential& pot, double u) {
  const auto ev = radial_eigenvalues(pot, u);
  if (!(ev.tangential > 0.0) || !(ev.radial > 0.0))
    throw PositivityViolation("potential '" + pot.name + "' not positive at u = " +
                              std::to_string(u));
}

// Standard complex structure on R^(2m): (Jx)_{2i} = -x_{2i+1}, (Jx)_{2i+1} = x_{2i}.
inline Eigen::VectorXd complex_structure_apply(const Eigen::VectorXd& x) {
  Eigen::VectorXd jx(x.size());
  for (int i = 0; i + 1 < x.size(); i += 2) {
    jx(i) = -x(i + 1);
    jx(i + 1) = x(i);
  }
  return jx;
}

inline MetricChart radial_kahler_chart(int m, const RadialPotential& pot, double declared_tau,
                                       double inner_radius = 1e-6) {
  if (m < 1) throw std::invalid_argument("complex dimension must be >= 1");
  MetricChart c;
  c.name = "radial-kahler[" + pot.name + "]";
  c.n = 2 * m;
  c.gamma_order = 1;
  c.declared_tau = declared_tau;
  c.inner_radius = inner_radius;
  c.kahler_holomorphic = true;
  c.complex_dim = m;
  c.eval_g = [pot](const Eigen::VectorXd& x) {
    const double u = x.squaredNorm();
    require_positive(pot, u);
    const double f1 = pot.f1(u), f2 = pot.f2(u);
    const Eigen::VectorXd jx = complex_structure_apply(x);
    Eigen::MatrixXd g = f1 * Eigen::MatrixXd::Identity(x.size(), x.size());
    g += f2 * (x * x.transpose() + jx * jx.transpose());
    return g;
  };
  c.eval_dg = [pot](const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    const double u = x.squaredNorm();
    require_positive(pot, u);
    const double f2 = pot.f2(u), f3 = pot.f3(u);
    const Eigen::VectorXd jx = complex_structure_apply(x);
    const Eigen::MatrixXd s = x * x.transpose() + jx * jx.transpose();
    std::vector<Eigen::MatrixXd> out(n);
    for (int l = 0; l < n; ++l) {
      Eigen::MatrixXd d = (2.0 * x(l)) * (f2 * Eigen::MatrixXd::Identity(n, n) + f3 * s);
      // d S / d x_l = e_l x^T + x e_l^T + (J e_l)(Jx)^T + (Jx)(J e_l)^T
      Eigen::VectorXd el = Eigen::VectorXd::Zero(n);
      el(l) = 1.0;
      const Eigen::VectorXd jel = complex_structure_apply(el);
      d += f2 * (el * x.transpose() + x * el.transpose() + jel * jx.transpose() +
                 jx * jel.transpose());
      out[l] = d;
    }
    return out;
  };
  return c;
}

// Convenience: the scalar-flat log family as a chart (fall-off tau = 2).
inline MetricChart burns_type_chart(double a) {
  return radial_kahler_chart(2, radial_potential_log(a), 2.0,
                             std::sqrt(std::max(1.0, 4.0 * std::abs(a))));
}

}  // namespace alemass
