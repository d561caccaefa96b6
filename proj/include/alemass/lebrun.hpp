#pragma once

// Closed-form scalar-flat Kähler ALE family on O(-ell) built from the
// hyperbolic-space monopole ansatz: the data are the base parameter
// ell >= 1 and hyperbolic distances r_j > 0 of the monopole points from
// the base point.  Everything needed here is available in closed form:
//
//   V = 1 + ell/(e^(2 r0) - 1) + sum_j 1/(e^(2 r_j) - 1)
//   area(Ftilde) = pi            (the base curve carries Fubini-Study area)
//   area(E_j)    = 2 pi / (e^(2 r_j) - 1)
//   mass         = (1/(3 ell)) [ 2 - ell + 4 sum_j 1/(e^(2 r_j) - 1) ]
//
// and agrees with the intersection-theoretic mass formula in the
// on-section basis.  The distinguished zero-mass instances place
// ell - 2 points at distance log(sqrt 5); e^(2 log sqrt 5) - 1 is
// simplified symbolically to 4 so the vanishing is exact in floating
// point, not approximate.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace alemass {

struct LebrunFamily {
  int ell = 1;
  std::vector<double> distances;  // hyperbolic distances of the points
  // e^(2 r_j) - 1 for each point; stored separately so symbolically
  // exact instances (integers) stay exact.
  std::vector<double> expansion;
};

inline LebrunFamily make_lebrun_family(int ell, const std::vector<double>& distances) {
  if (ell < 1) throw std::invalid_argument("ell must be a positive integer");
  LebrunFamily f;
  f.ell = ell;
  f.distances = distances;
  for (double r : distances) {
    if (r <= 0) throw std::invalid_argument("monopole distances must be positive");
    f.expansion.push_back(std::expm1(2.0 * r));
  }
  return f;
}

// The zero-mass member: ell - 2 points at distance log(sqrt 5).
inline LebrunFamily zero_mass_instance(int ell) {
  if (ell < 3) throw std::invalid_argument("zero-mass instances require ell >= 3");
  LebrunFamily f;
  f.ell = ell;
  f.distances.assign(ell - 2, 0.5 * std::log(5.0));
  f.expansion.assign(ell - 2, 4.0);  // e^(2 log sqrt 5) - 1 = 4, exactly
  return f;
}

// Monopole potential at a point with hyperbolic distance r0 from the
// base point and distances point_distances[j] from the monopole points.
inline double potential_V(const LebrunFamily& f, double r0,
                          const std::vector<double>& point_distances) {
  if (point_distances.size() != f.expansion.size())
    throw std::invalid_argument("one distance per monopole point required");
  if (r0 <= 0) throw std::invalid_argument("distances must be positive");
  double v = 1.0 + f.ell / std::expm1(2.0 * r0);
  for (double r : point_distances) {
    if (r <= 0) throw std::invalid_argument("distances must be positive");
    v += 1.0 / std::expm1(2.0 * r);
  }
  return v;
}

struct CurveAreas {
  double base_curve;            // area of the section Ftilde
  std::vector<double> exceptional;  // areas of the E_j
};

inline CurveAreas curve_areas(const LebrunFamily& f) {
  CurveAreas a;
  a.base_curve = std::numbers::pi;
  for (double e : f.expansion) a.exceptional.push_back(2.0 * std::numbers::pi / e);
  return a;
}

inline double closed_form_mass(const LebrunFamily& f) {
  double s = 0.0;
  for (double e : f.expansion) s += 1.0 / e;
  return (2.0 - f.ell + 4.0 * s) / (3.0 * f.ell);
}

// Mass of the symmetric configuration with `count` points at equal
// distance r (used to locate the sign change in r).
inline double equal_distance_mass(int ell, int count, double r) {
  return closed_form_mass(make_lebrun_family(ell, std::vector<double>(count, r)));
}

// For ell >= 3 with a single monopole point at distance r, the mass
// changes sign at r* = (1/2) log(1 + 4/(ell-2)); closer is positive.
inline double sign_change_radius(int ell) {
  if (ell < 3) throw std::invalid_argument("sign change requires ell >= 3");
  return 0.5 * std::log(1.0 + 4.0 / (ell - 2.0));
}

}  // namespace alemass
