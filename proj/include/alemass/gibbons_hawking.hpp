#pragma once

// Multi-center Gibbons-Hawking (hyperkähler ALE) metrics in an
// asymptotic Cartesian chart on R^4, suitable for the ADM surface
// integral.  These spaces have ADM mass exactly zero, which makes them
// a sharp end-to-end validation family for the numeric pipeline.
//
// Construction.  On R^3 x S^1 the metric is
//   g = V h_flat + V^-1 (dt + theta)^2,   d theta = *_3 dV,
//   V(y) = sum_i 1 / (2 |y - p_i|),
// with fiber period 2 pi.  For k centers the end is (R^4 \ ball)/Z_k.
// The chart map from the Euclidean cover x in R^4 uses the quadratic
// fibration (z1 = x1 + i x2, z2 = x3 + i x4)
//   K(x) = ( (|z1|^2 - |z2|^2)/2,  Re(z1 conj(z2)),  Im(z1 conj(z2)) ),
//   y(x) = K(x) / k,     |K(x)| = |x|^2 / 2 ,
// under which the flat model satisfies the exact algebraic identity
//   dK.dK + beta^2 = |x|^2 delta_4,
//   beta = -x2 dx1 + x1 dx2 - x4 dx3 + x3 dx4 ,
// and the single-center potential V0 = 1/(2|y|) pulls back to the
// smooth, string-free connection form eta0 = beta / |x|^2.
//
// The full connection 1-form on the cover is
//   eta = k eta0 + pullback( theta_V - theta_ref ),
// where theta_V is the sum of Dirac monopole potentials of charge 1/2
// at the p_i and theta_ref is the single charge-k/2 potential at the
// origin, all written with the same string direction d (strings along
// the rays p - s d, s > 0).  The two string families cancel at infinity
// but not pointwise, so the chart excludes a thin angular tube around
// the string axis; quadrature grids are rotated off that tube rather
// than ever evaluating garbage inside it.  The assembled metric is
//   g = V (Dy)^T (Dy) + V^-1 eta eta^T   ->  delta + O(|x|^-2)
// (fall-off tau = 2), and for k = 1 with the center at the origin it
// is exactly the identity chart.

#include "alemass/metrics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace alemass {

struct GibbonsHawkingData {
  std::vector<Eigen::Vector3d> centers;
  Eigen::Vector3d string_direction = Eigen::Vector3d(0, 0, 1);
};

namespace gh_detail {

// Fibration map K and its Jacobian rows dK_a/dx_j.
inline Eigen::Vector3d fibration(const Eigen::Vector4d& x) {
  return {0.5 * (x(0) * x(0) + x(1) * x(1) - x(2) * x(2) - x(3) * x(3)),
          x(0) * x(2) + x(1) * x(3),
          x(1) * x(2) - x(0) * x(3)};
}

inline Eigen::Matrix<double, 3, 4> fibration_jacobian(const Eigen::Vector4d& x) {
  Eigen::Matrix<double, 3, 4> j;
  j.row(0) << x(0), x(1), -x(2), -x(3);
  j.row(1) << x(2), x(3), x(0), x(1);
  j.row(2) << -x(3), x(2), x(1), -x(0);
  return j;
}

// beta = -x2 dx1 + x1 dx2 - x4 dx3 + x3 dx4 (components as a covector).
inline Eigen::Vector4d beta_form(const Eigen::Vector4d& x) {
  return {-x(1), x(0), -x(3), x(2)};
}

struct MonopoleFrame {
  Eigen::Vector3d d;   // string axis (unit)
  Eigen::Vector3d e1;  // right-handed orthonormal frame (e1, e2, d)
  Eigen::Vector3d e2;
};

inline MonopoleFrame make_frame(const Eigen::Vector3d& direction) {
  MonopoleFrame f;
  const double norm = direction.norm();
  if (norm < 1e-12) throw std::invalid_argument("string direction must be nonzero");
  f.d = direction / norm;
  Eigen::Vector3d seed = std::abs(f.d(0)) < 0.9 ? Eigen::Vector3d(1, 0, 0)
                                                : Eigen::Vector3d(0, 1, 0);
  f.e1 = (seed - seed.dot(f.d) * f.d).normalized();
  f.e2 = f.d.cross(f.e1);
  return f;
}

// Dirac monopole potential for V = c/r around the origin of u-space,
// with the string along the ray u = -s d (s > 0):
//   w = c (cos(theta) - 1) dphi,  theta measured from +d.
// Satisfies curl(w) = grad(c/r), i.e. dw = *dV, away from the string.
// Cancellation-free form:  (cos(theta) - 1)/s_perp^2 = -1/(r (r + u.d)),
// so  A = -c (u1 e2 - u2 e1) / (r^2 + r u.d),  regular on the +d axis
// and singular exactly on the string ray.  Returns the covector A and
// (optionally) its Jacobian dA_j/du_k.
inline Eigen::Vector3d monopole_potential(const Eigen::Vector3d& u, double c,
                                          const MonopoleFrame& fr,
                                          Eigen::Matrix3d* jacobian = nullptr) {
  const double r = u.norm();
  const double ud = u.dot(fr.d);
  const double u1 = u.dot(fr.e1);
  const double u2 = u.dot(fr.e2);
  const double denom = r * r + r * ud;
  if (!(denom > 1e-300))
    throw ChartDomainError("monopole potential evaluated on its string axis");
  const double f = -c / denom;
  const Eigen::Vector3d cross_part = u1 * fr.e2 - u2 * fr.e1;
  const Eigen::Vector3d a = f * cross_part;
  if (jacobian) {
    // d(denom)/du = 2u + (u.d/r) u + r d ;  df/du = (c/denom^2) d(denom)/du
    const Eigen::Vector3d grad_denom = 2.0 * u + (ud / r) * u + r * fr.d;
    const Eigen::Vector3d grad_f = (c / (denom * denom)) * grad_denom;
    // d(cross_part)/du = e2 e1^T - e1 e2^T   (rows: component, cols: d/du)
    const Eigen::Matrix3d cross_jac =
        fr.e2 * fr.e1.transpose() - fr.e1 * fr.e2.transpose();
    *jacobian = cross_part * grad_f.transpose() + f * cross_jac;
  }
  return a;
}

}  // namespace gh_detail

// Harmonic potential V(y) = sum 1/(2|y - p_i|) and its gradient.
inline double gibbons_hawking_potential(const GibbonsHawkingData& data,
                                        const Eigen::Vector3d& y,
                                        Eigen::Vector3d* grad = nullptr) {
  double v = 0.0;
  if (grad) grad->setZero();
  for (const auto& p : data.centers) {
    const Eigen::Vector3d u = y - p;
    const double r = u.norm();
    if (r < 1e-300) throw ChartDomainError("potential evaluated at a center");
    v += 0.5 / r;
    if (grad) *grad += -0.5 / (r * r * r) * u;
  }
  return v;
}

// Assembled connection covector theta_V - theta_ref in y-space (the
// decaying gauge difference), with optional Jacobian.  Exposed for the
// dtheta = *dV verification tests.
inline Eigen::Vector3d gibbons_hawking_gauge_difference(const GibbonsHawkingData& data,
                                                        const Eigen::Vector3d& y,
                                                        Eigen::Matrix3d* jacobian = nullptr) {
  const auto frame = gh_detail::make_frame(data.string_direction);
  const int k = static_cast<int>(data.centers.size());
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  if (jacobian) jacobian->setZero();
  Eigen::Matrix3d jpart;
  for (const auto& p : data.centers) {
    a += gh_detail::monopole_potential(y - p, 0.5, frame, jacobian ? &jpart : nullptr);
    if (jacobian) *jacobian += jpart;
  }
  a -= gh_detail::monopole_potential(y, 0.5 * k, frame, jacobian ? &jpart : nullptr);
  if (jacobian) *jacobian -= jpart;
  return a;
}

// Full monopole potential theta_V (sum over centers) for curl tests.
inline Eigen::Vector3d gibbons_hawking_monopole_potential(const GibbonsHawkingData& data,
                                                          const Eigen::Vector3d& y,
                                                          Eigen::Matrix3d* jacobian = nullptr) {
  const auto frame = gh_detail::make_frame(data.string_direction);
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  if (jacobian) jacobian->setZero();
  Eigen::Matrix3d jpart;
  for (const auto& p : data.centers) {
    a += gh_detail::monopole_potential(y - p, 0.5, frame, jacobian ? &jpart : nullptr);
    if (jacobian) *jacobian += jpart;
  }
  return a;
}

inline MetricChart gibbons_hawking_chart(const GibbonsHawkingData& data) {
  const int k = static_cast<int>(data.centers.size());
  if (k < 1) throw std::invalid_argument("Gibbons-Hawking chart needs at least one center");
  const auto frame = gh_detail::make_frame(data.string_direction);
  double spread = 0.0;
  for (const auto& p : data.centers) spread = std::max(spread, p.norm());

  MetricChart c;
  c.name = "gibbons-hawking[k=" + std::to_string(k) + "]";
  c.n = 4;
  c.gamma_order = k;
  c.declared_tau = 2.0;
  // Keep the integration region well outside all centers (in y-space
  // the centers sit inside radius `spread`; |y| = |x|^2 / (2k)).
  c.inner_radius = std::sqrt(2.0 * k * 4.0 * (spread + 1.0));

  const double tube_angle = 0.02;  // excluded y-angle around the string axis

  GibbonsHawkingData local = data;
  auto eval = [local, frame, k](const Eigen::Vector4d& x) {
    const Eigen::Vector3d ks = gh_detail::fibration(x);
    const Eigen::Vector3d y = ks / k;
    const Eigen::Matrix<double, 3, 4> dy = gh_detail::fibration_jacobian(x) / k;
    const double v = gibbons_hawking_potential(local, y);
    const double rho2 = x.squaredNorm();
    const Eigen::Vector4d eta0 = gh_detail::beta_form(x) / rho2;
    const Eigen::Vector3d a = gibbons_hawking_gauge_difference(local, y);
    const Eigen::Vector4d eta = k * eta0 + dy.transpose() * a;
    Eigen::Matrix4d g = v * dy.transpose() * dy + (1.0 / v) * eta * eta.transpose();
    return Eigen::MatrixXd(g);
  };

  c.eval_g = [eval](const Eigen::VectorXd& x) { return eval(Eigen::Vector4d(x)); };

  c.is_admissible = [k, frame, tube_angle](const Eigen::VectorXd& x) {
    const Eigen::Vector3d y = gh_detail::fibration(Eigen::Vector4d(x)) / k;
    const double r = y.norm();
    if (r <= 0) return false;
    // Exclude a tube around the negative string axis where the gauge
    // difference is singular (sin of the y-angle to -d below threshold
    // on that side).
    const double cosang = y.dot(frame.d) / r;
    return cosang > -1.0 + 0.5 * tube_angle * tube_angle;
  };
  return c;
}

}  // namespace alemass
