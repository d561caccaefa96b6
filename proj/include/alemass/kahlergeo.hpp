#pragma once

// Curvature quantities of U(m)-invariant Kähler metrics, the scalar
// curvature volume integral, and the two inequality checkers (Penrose
// bound and positive mass).  The checkers report structured verdicts
// and never throw on a violated inequality: a failed mathematical
// statement is a result, not an error.

#include "alemass/homcalc.hpp"
#include "alemass/quadrature.hpp"
#include "alemass/radial_kahler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace alemass {

namespace detail {

// L(u) = log det(Hermitian form) = log[(uF')' F'^(m-1)]; its radial
// derivative is analytic in the supplied potential derivatives:
//   L'(u) = (2F'' + uF''') / (uF')'  +  (m-1) F'' / F'.
inline double logdet_radial_derivative(int m, const RadialPotential& pot, double u) {
  require_positive(pot, u);
  const double f1 = pot.f1(u), f2 = pot.f2(u), f3 = pot.f3(u);
  return (2.0 * f2 + u * f3) / (f1 + u * f2) + (m - 1) * f2 / f1;
}

// L''(u) by central differencing of the analytic L' (the potential
// interface carries three derivatives of F; the fourth enters only
// through this second derivative of the log-determinant).
inline double logdet_second_derivative(int m, const RadialPotential& pot, double u) {
  const double h = std::max(1e-5 * u, 1e-9);
  return (logdet_radial_derivative(m, pot, u + h) - logdet_radial_derivative(m, pot, u - h)) /
         (2.0 * h);
}

}  // namespace detail

// Scalar curvature of the chart of F at radius u = |z|^2:
//   s = -2 [ (m-1) L'/F' + (u L')' / (uF')' ].
inline double radial_scalar_curvature(int m, const RadialPotential& pot, double u) {
  if (m < 1) throw std::invalid_argument("complex dimension must be >= 1");
  if (u <= 0) throw std::invalid_argument("u must be positive");
  require_positive(pot, u);
  const double f1 = pot.f1(u), f2 = pot.f2(u);
  const double lp = detail::logdet_radial_derivative(m, pot, u);
  const double lpp = detail::logdet_second_derivative(m, pot, u);
  return -2.0 * ((m - 1) * lp / f1 + (lp + u * lpp) / (f1 + u * f2));
}

// Norm of the Ricci form with respect to the metric itself
// (eigenvalue decomposition: radial -(uL')', tangential -L').
inline double ricci_form_norm(int m, const RadialPotential& pot, double u) {
  require_positive(pot, u);
  const double f1 = pot.f1(u), f2 = pot.f2(u);
  const double lp = detail::logdet_radial_derivative(m, pot, u);
  const double lpp = detail::logdet_second_derivative(m, pot, u);
  const double radial = (lp + u * lpp) / (f1 + u * f2);
  const double tangential = lp / f1;
  return std::sqrt(radial * radial + (m - 1) * tangential * tangential);
}

// Integral of s dmu over the annulus u0 <= |z|^2 <= u1.  The volume
// form of the chart is (uF')' F'^(m-1) dx, and the shell reduction is
//   int s dmu = Vol(S^(2m-1))/2 * int_u0^u1 s(u) (uF')'(u) F'(u)^(m-1) u^(m-1) du,
// evaluated by composite Gauss-Legendre on geometric subintervals.
inline double scalar_integral(int m, const RadialPotential& pot, double u0, double u1) {
  if (!(0 < u0 && u0 < u1)) throw std::invalid_argument("need 0 < u0 < u1");
  const auto rule = detail::gauss_gegenbauer(24, 0.0);  // Legendre
  const int segments = std::max(8, static_cast<int>(4 * std::log2(u1 / u0)));
  const double grow = std::pow(u1 / u0, 1.0 / segments);
  std::vector<double> contributions;
  double lo = u0;
  for (int s = 0; s < segments; ++s) {
    const double hi = (s + 1 == segments) ? u1 : lo * grow;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = mid + half * rule.nodes[i];
      const double f1 = pot.f1(u);
      const double density = (f1 + u * pot.f2(u)) * std::pow(f1, m - 1) * std::pow(u, m - 1);
      contributions.push_back(half * rule.weights[i] * radial_scalar_curvature(m, pot, u) *
                              density);
    }
    lo = hi;
  }
  return 0.5 * sphere_area(2 * m) * pairwise_sum(contributions);
}

// ---------------------------------------------------------------------------
// Penrose-type inequality for AE Kähler manifolds: the mass dominates
//   bound = (m-1)! / ((2m-1) pi^(m-1)) * sum_j n_j Vol(D_j)
// over the divisor sum_j n_j D_j, with equality exactly in the
// scalar-flat case.

struct DivisorComponent {
  std::string label;
  int multiplicity = 1;    // n_j >= 1
  double volume = 0.0;     // Vol(D_j) > 0
};

struct DivisorData {
  int m = 2;  // complex dimension
  std::vector<DivisorComponent> components;
};

inline double penrose_bound(const DivisorData& divisor) {
  if (divisor.m < 2) throw std::invalid_argument("divisor data needs m >= 2");
  double s = 0.0;
  for (const auto& c : divisor.components) {
    if (c.multiplicity < 1) throw std::invalid_argument("divisor multiplicities must be >= 1");
    if (c.volume <= 0) throw std::invalid_argument("divisor volumes must be positive");
    s += c.multiplicity * c.volume;
  }
  const double fact = std::tgamma(static_cast<double>(divisor.m));
  return fact / ((2.0 * divisor.m - 1.0) * std::pow(std::numbers::pi, divisor.m - 1)) * s;
}

struct PenroseVerdict {
  double mass = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  bool holds = false;              // mass >= bound - tolerance
  bool equality = false;           // |mass - bound| <= tolerance
  bool scalar_flat_claimed = false;
  // Equality should occur exactly for scalar-flat metrics; this flags
  // whether the observed case matches that expectation.
  bool consistent_with_rigidity = false;
  std::string message;
};

inline PenroseVerdict penrose_check(double mass, const DivisorData& divisor,
                                    bool scalar_flat_claimed, double tolerance = 1e-9) {
  PenroseVerdict v;
  v.mass = mass;
  v.bound = penrose_bound(divisor);
  v.tolerance = tolerance;
  v.scalar_flat_claimed = scalar_flat_claimed;
  v.holds = mass >= v.bound - tolerance;
  v.equality = std::abs(mass - v.bound) <= tolerance;
  v.consistent_with_rigidity = (v.equality == scalar_flat_claimed);
  if (!v.holds)
    v.message = "mass falls below the divisor bound";
  else if (v.equality && !scalar_flat_claimed)
    v.message = "equality holds but the metric was not claimed scalar-flat";
  else if (!v.equality && scalar_flat_claimed)
    v.message = "scalar-flat metric should attain equality but does not";
  else
    v.message = v.equality ? "bound attained (scalar-flat rigidity case)" : "strict inequality";
  return v;
}

// ---------------------------------------------------------------------------
// Positive mass check for AE manifolds with nonnegative scalar
// curvature, with the rigidity (zero mass => flat) cross-check driven
// by caller-supplied curvature samples.

struct PositiveMassVerdict {
  bool applicable = false;  // AE with s >= 0
  bool passed = false;      // mass >= -tolerance (when applicable)
  bool rigidity_case = false;       // |mass| <= tolerance
  bool flatness_verified = false;   // all curvature samples vanish
  double mass = 0.0;
  double tolerance = 0.0;
  std::string message;
};

inline PositiveMassVerdict positive_mass_check(double mass, bool scalar_nonnegative, bool is_ae,
                                               const std::vector<double>& curvature_samples = {},
                                               double tolerance = 1e-9) {
  PositiveMassVerdict v;
  v.mass = mass;
  v.tolerance = tolerance;
  if (!is_ae) {
    v.message = "not asymptotically Euclidean (|Gamma| > 1): positive-mass statement does not apply";
    return v;
  }
  if (!scalar_nonnegative) {
    v.message = "scalar curvature changes sign: positive-mass statement does not apply";
    return v;
  }
  v.applicable = true;
  v.passed = mass >= -tolerance;
  v.rigidity_case = std::abs(mass) <= tolerance;
  if (v.rigidity_case) {
    v.flatness_verified = !curvature_samples.empty();
    for (double c : curvature_samples)
      if (std::abs(c) > tolerance) v.flatness_verified = false;
    v.message = v.flatness_verified
                    ? "zero mass and all curvature samples vanish (rigidity case)"
                    : "zero mass: flatness must be verified with curvature samples";
  } else {
    v.message = v.passed ? "mass is positive" : "NEGATIVE MASS with nonnegative scalar curvature";
  }
  return v;
}

}  // namespace alemass
