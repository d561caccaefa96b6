#pragma once

// Metric charts: explicit asymptotic coordinate charts g_jk(x) on the
// complement of a ball, with analytic derivatives where available and
// a central finite-difference fallback otherwise.
//
// A chart evaluates the metric components of an ALE end in a Euclidean
// coordinate system in which g -> delta at the declared fall-off rate
// tau (i.e. |g - delta| = O(|x|^-tau)).  gamma_order is |Gamma| for an
// end modeled on (R^n \ ball)/Gamma; surface integrals over S_rho/Gamma
// are computed as 1/|Gamma| times the integral over the full sphere.

#include "alemass/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alemass {

class ChartDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MetricChart {
  std::string name;
  int n = 0;                 // real dimension
  int gamma_order = 1;       // |Gamma| of the asymptotic quotient
  double inner_radius = 0.0; // chart valid for |x| > inner_radius
  double declared_tau = 0.0; // fall-off: |g - delta| = O(|x|^-tau)
  bool kahler_holomorphic = false;  // Kähler metric in holomorphic coordinates
  int complex_dim = 0;              // m when kahler_holomorphic

  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> eval_g;
  // Optional analytic derivatives: dg(x)[l](j,k) = d g_jk / d x_l.
  std::function<std::vector<Eigen::MatrixXd>(const Eigen::VectorXd&)> eval_dg;
  // Optional admissibility predicate (false near gauge singularities
  // such as Dirac strings); quadrature grids must avoid such points.
  std::function<bool(const Eigen::VectorXd&)> is_admissible;

  bool admissible(const Eigen::VectorXd& x) const {
    return !is_admissible || is_admissible(x);
  }

  void check_domain(const Eigen::VectorXd& x) const {
    if (x.size() != n) throw ChartDomainError("chart '" + name + "': point dimension mismatch");
    if (x.norm() <= inner_radius)
      throw ChartDomainError("chart '" + name + "': point inside inner radius");
    if (!admissible(x))
      throw ChartDomainError("chart '" + name + "': point in excluded gauge region");
  }

  Eigen::MatrixXd g(const Eigen::VectorXd& x) const {
    check_domain(x);
    return eval_g(x);
  }

  // Metric derivatives; falls back to central differences with
  // h = max(1e-4 |x|, 1e-6) when no analytic derivative is supplied.
  std::vector<Eigen::MatrixXd> dg(const Eigen::VectorXd& x) const {
    check_domain(x);
    if (eval_dg) return eval_dg(x);
    const double h = std::max(1e-4 * x.norm(), 1e-6);
    std::vector<Eigen::MatrixXd> out(n);
    Eigen::VectorXd xp = x, xm = x;
    for (int l = 0; l < n; ++l) {
      xp(l) += h;
      xm(l) -= h;
      out[l] = (eval_g(xp) - eval_g(xm)) / (2.0 * h);
      xp(l) = x(l);
      xm(l) = x(l);
    }
    return out;
  }

  MetricChart with_gamma_order(int k) const {
    MetricChart c(*this);
    c.gamma_order = k;
    return c;
  }
};

// ---------------------------------------------------------------------------
// Euclidean chart (any n >= 3): g = delta exactly.

inline MetricChart euclidean_chart(int n) {
  if (n < 3) throw std::invalid_argument("euclidean_chart requires n >= 3");
  MetricChart c;
  c.name = "euclidean";
  c.n = n;
  c.declared_tau = 1e9;  // identically flat
  c.inner_radius = 0.0;
  c.eval_g = [n](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(n, n); };
  c.eval_dg = [n](const Eigen::VectorXd&) {
    return std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n));
  };
  return c;
}

// ---------------------------------------------------------------------------
// Schwarzschild spatial slice of mass parameter A in dimension n >= 3,
// in the Cartesian chart obtained from the area-radius form
//   g = (1 - A rho^(2-n))^-1 drho^2 + rho^2 h_round :
//   g_jk = delta_jk + psi(rho) x_j x_k,
//   psi(rho) = A / (rho^2 (rho^(n-2) - A)).
// ADM mass A/2; the chart is valid for rho^(n-2) > A.

inline MetricChart schwarzschild_chart(int n, double a_param) {
  if (n < 3) throw std::invalid_argument("schwarzschild_chart requires n >= 3");
  MetricChart c;
  c.name = "schwarzschild";
  c.n = n;
  c.declared_tau = static_cast<double>(n - 2);
  c.inner_radius =
      a_param > 0 ? std::pow(1.5 * a_param, 1.0 / (n - 2)) : 1e-3;
  c.eval_g = [n, a_param](const Eigen::VectorXd& x) {
    const double rho = x.norm();
    const double denom = std::pow(rho, n - 2) - a_param;
    const double psi = a_param / (rho * rho * denom);
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    g += psi * x * x.transpose();
    return g;
  };
  c.eval_dg = [n, a_param](const Eigen::VectorXd& x) {
    const double rho = x.norm();
    const double rn2 = std::pow(rho, n - 2);
    const double denom = rn2 - a_param;
    const double psi = a_param / (rho * rho * denom);
    // d psi / d rho
    const double dpsi = -a_param * (2.0 * denom + (n - 2.0) * rn2) / (rho * rho * rho * denom * denom);
    std::vector<Eigen::MatrixXd> out(n);
    for (int l = 0; l < n; ++l) {
      Eigen::MatrixXd d = dpsi * (x(l) / rho) * x * x.transpose();
      for (int k = 0; k < n; ++k) {
        d(l, k) += psi * x(k);
        d(k, l) += psi * x(k);
      }
      out[l] = d;
    }
    return out;
  };
  return c;
}

// ---------------------------------------------------------------------------
// Test-particle circular orbit angular frequencies (Kepler's third law
// in n spatial dimensions, and its Schwarzschild-parameter variant).

inline double circular_orbit_frequency(int n, double mass, double rho) {
  if (n < 3) throw std::invalid_argument("orbit frequency requires n >= 3");
  if (rho <= 0) throw std::invalid_argument("orbit radius must be positive");
  const double w2 = (n - 2.0) * mass / std::pow(rho, n);
  if (w2 < 0) throw std::domain_error("no circular orbit: negative mass");
  return std::sqrt(w2);
}

inline double schwarzschild_orbit_frequency(int n, double a_param, double rho) {
  if (n < 3) throw std::invalid_argument("orbit frequency requires n >= 3");
  if (rho <= 0) throw std::invalid_argument("orbit radius must be positive");
  const double w2 = 0.5 * (n - 2.0) * a_param / std::pow(rho, n);
  if (w2 < 0) throw std::domain_error("no circular orbit: negative mass parameter");
  return std::sqrt(w2);
}

// ---------------------------------------------------------------------------
// Fall-off diagnostics: least-squares slope of log max_jk |g - delta|
// against log rho.  For a chart decaying like rho^-tau the slope is
// approximately -tau.

inline double decay_slope(const MetricChart& chart, const std::vector<double>& radii,
                          const Eigen::VectorXd& direction) {
  if (radii.size() < 2) throw std::invalid_argument("decay_slope needs at least two radii");
  const Eigen::VectorXd u = direction.normalized();
  std::vector<double> lx, ly;
  for (double rho : radii) {
    const Eigen::MatrixXd dev =
        chart.g(rho * u) - Eigen::MatrixXd::Identity(chart.n, chart.n);
    const double mag = dev.cwiseAbs().maxCoeff();
    if (mag < 1e-300) continue;
    lx.push_back(std::log(rho));
    ly.push_back(std::log(mag));
  }
  if (lx.size() < 2) throw std::domain_error("metric is flat along this ray; no decay slope");
  const std::size_t m = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace alemass
