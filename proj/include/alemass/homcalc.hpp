#pragma once

// Topological mass formulas for asymptotically locally Euclidean (ALE)
// and asymptotically Euclidean (AE) scalar-flat Kähler surfaces, plus
// the general cohomological mass formula in any complex dimension m.
//
// Orientation / sign conventions (fixed throughout the library):
//   * Intersection numbers use the complex orientation; an exceptional
//     (-1)-curve E of a blow-up has E.E = -1, and the negated ADE
//     Cartan matrices (diagonal -2) are the minimal-resolution forms.
//   * c1 entries are the pairings  <c1, E_j>  (rational numbers).
//   * areas are  integral_{E_j} omega  (nonnegative for genuine Kähler
//     classes; negative entries are accepted with a warning so that
//     formal classes can still be explored).
//
// The central exact objects are the expansion coefficients
//   a = Q^{-1} c1                      (exact rational)
// and the surface mass
//   mass = -(1/(3 pi)) sum_j a_j area_j.
//
// In complex dimension m the general formula is
//   mass = -pairing/((2m-1) pi^(m-1))
//          + (m-1)!/(4 (2m-1) pi^m) * total_scalar_integral
// and on a compact manifold the same coefficients rearrange into the
// anomaly identity
//   (4 pi^m (2m-1)/(m-1)!) * mass = total_scalar_integral
//                                   - (4 pi/(m-1)!) * pairing.

#include "alemass/rational.hpp"
#include "alemass/rational_matrix.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace alemass {

struct IntersectionData {
  std::vector<std::string> basis;   // labels of the curve classes E_j
  std::vector<std::vector<std::int64_t>> q;  // intersection matrix Q
  std::vector<Rational> c1;         // <c1, E_j>
  std::vector<double> areas;        // integral_{E_j} omega

  std::size_t rank() const { return basis.size(); }

  // Structural validation; throws std::invalid_argument on hard errors,
  // returns human-readable warnings (e.g. negative areas) otherwise.
  std::vector<std::string> validate() const {
    const std::size_t b = basis.size();
    if (b == 0) throw std::invalid_argument("intersection data needs at least one basis class");
    if (q.size() != b) throw std::invalid_argument("Q row count does not match basis size");
    for (const auto& row : q)
      if (row.size() != b) throw std::invalid_argument("Q must be square");
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = i + 1; j < b; ++j)
        if (q[i][j] != q[j][i]) throw std::invalid_argument("Q must be symmetric");
    if (c1.size() != b) throw std::invalid_argument("c1 length does not match basis size");
    if (areas.size() != b) throw std::invalid_argument("areas length does not match basis size");
    std::vector<std::string> warnings;
    for (std::size_t j = 0; j < b; ++j)
      if (areas[j] < 0)
        warnings.push_back("area of '" + basis[j] + "' is negative; formal Kähler class");
    return warnings;
  }

  RationalMatrix q_matrix() const {
    RationalMatrix m(q.size(), q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) m(i, j) = Rational(q[i][j]);
    return m;
  }
};

// Exact expansion coefficients a with Q a = c1.
inline std::vector<Rational> solve_chern_coefficients(const IntersectionData& data) {
  data.validate();
  return solve(data.q_matrix(), data.c1);
}

// Exact rational pairing sum a_j r_j; used by the property tests that
// must hold identically, with the areas supplied as rationals.
inline Rational pairing_exact(const std::vector<Rational>& a, const std::vector<Rational>& areas) {
  if (a.size() != areas.size()) throw std::invalid_argument("pairing length mismatch");
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * areas[j];
  return s;
}

// Surface (m = 2) topological mass:  -(1/(3 pi)) sum_j a_j area_j.
inline double topological_mass_surface(const IntersectionData& data) {
  const auto a = solve_chern_coefficients(data);
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += to_double(a[j]) * data.areas[j];
  const double mass = -s / (3.0 * std::numbers::pi);
  return mass == 0.0 ? 0.0 : mass;  // avoid returning -0 in the Ricci-flat case
}

// AE surface obtained by blowing up C^2 at distinct points:
// Q = -I, <c1, E_j> = 1, so the mass reduces to +(1/(3 pi)) sum areas.
inline double mass_ae_blowup(const std::vector<double>& areas) {
  double s = 0.0;
  for (double x : areas) s += x;
  return s / (3.0 * std::numbers::pi);
}

// ALE surface asymptotic to C^2/Z_ell, resolution of O(-ell), in the
// basis using a fiber-class section F with F.F = -ell disjoint from the
// exceptional curves:  mass = (1/(3 pi)) [ ((2-ell)/ell) area_F + sum areas ].
inline double mass_oell_off_section(int ell, double area_f, const std::vector<double>& areas_e) {
  if (ell <= 0) throw std::invalid_argument("ell must be a positive integer");
  double s = 0.0;
  for (double x : areas_e) s += x;
  return ((2.0 - ell) / ell * area_f + s) / (3.0 * std::numbers::pi);
}

// Same space in the basis whose section Ftilde meets every exceptional
// curve once (Ftilde = F - sum E_j in homology):
//   mass = (1/(3 pi ell)) [ (2-ell) area_Ftilde + 2 sum areas ].
inline double mass_oell_on_section(int ell, double area_ftilde, const std::vector<double>& areas_e) {
  if (ell <= 0) throw std::invalid_argument("ell must be a positive integer");
  double s = 0.0;
  for (double x : areas_e) s += x;
  return ((2.0 - ell) * area_ftilde + 2.0 * s) / (3.0 * std::numbers::pi * ell);
}

// General cohomological mass in complex dimension m >= 2.
//   pairing          = <c1 ∪ [omega]^(m-1)>  (real number)
//   scalar_integral  = integral_M s dmu      (real number)
inline double topological_mass_general(int m, double pairing, double scalar_integral) {
  if (m < 1) throw std::invalid_argument("complex dimension must be >= 1");
  const double pi = std::numbers::pi;
  const double fact = std::tgamma(static_cast<double>(m));  // (m-1)!
  return -pairing / ((2.0 * m - 1.0) * std::pow(pi, m - 1)) +
         fact / (4.0 * (2.0 * m - 1.0) * std::pow(pi, m)) * scalar_integral;
}

// Compact-case anomaly:  (4 pi^m (2m-1)/(m-1)!) * mass, which equals
// scalar_integral - (4 pi/(m-1)!) * pairing identically.
inline double compact_anomaly(int m, double pairing, double scalar_integral) {
  if (m < 1) throw std::invalid_argument("complex dimension must be >= 1");
  const double pi = std::numbers::pi;
  const double fact = std::tgamma(static_cast<double>(m));
  const double mass = topological_mass_general(m, pairing, scalar_integral);
  return 4.0 * std::pow(pi, m) * (2.0 * m - 1.0) / fact * mass;
}

// Sign certificate for minimal resolutions (exceptional set of rational
// double point type, or more generally any Q with entrywise nonpositive
// inverse): with <c1, E_j> <= 0 and areas >= 0 the mass is nonpositive,
// vanishing exactly in the Ricci-flat (c1 = 0) case.
struct MinimalResolutionCertificate {
  bool qinv_entrywise_nonpositive = false;
  bool coefficients_nonnegative = false;
  bool mass_nonpositive = false;
  bool is_ricci_flat_case = false;  // all coefficients vanish
  double mass = 0.0;
};

inline MinimalResolutionCertificate minimal_resolution_certificate(const IntersectionData& data) {
  data.validate();
  MinimalResolutionCertificate cert;
  const RationalMatrix qinv = inverse(data.q_matrix());
  cert.qinv_entrywise_nonpositive = true;
  for (std::size_t i = 0; i < qinv.rows(); ++i)
    for (std::size_t j = 0; j < qinv.cols(); ++j)
      if (qinv(i, j) > 0) cert.qinv_entrywise_nonpositive = false;
  const auto a = solve_chern_coefficients(data);
  cert.coefficients_nonnegative = true;
  cert.is_ricci_flat_case = true;
  for (const auto& aj : a) {
    if (aj < 0) cert.coefficients_nonnegative = false;
    if (aj != 0) cert.is_ricci_flat_case = false;
  }
  cert.mass = topological_mass_surface(data);
  cert.mass_nonpositive = cert.mass <= 0.0;
  return cert;
}

}  // namespace alemass
