#pragma once

// Name-indexed factory for the metric chart families, parameterized by a
// JSON object.  This is the single construction point shared by the CLI
// and the scripted reproduction runs, so family names and parameter
// spellings stay consistent everywhere.

#include "alemass/gibbons_hawking.hpp"
#include "alemass/lebrun.hpp"
#include "alemass/metrics.hpp"
#include "alemass/radial_kahler.hpp"

#include <json.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace alemass {

struct FamilyInfo {
  std::string name;
  std::string parameters;   // human-readable parameter summary
  std::string description;
};

inline std::vector<FamilyInfo> list_families() {
  return {
      {"euclidean", "n:int>=3",
       "Flat R^n reference chart; mass is identically zero."},
      {"schwarzschild", "n:int>=3, A:double",
       "Conformally flat exterior chart with closed-form mass A/2."},
      {"gibbons-hawking",
       "centers:[[x,y,z]..] | (k:int, seed:int, spread:double), "
       "string_direction:[x,y,z]",
       "Multi-center hyperkahler 4-manifold written in an asymptotic chart; "
       "mass 0, quotient order = number of centers."},
      {"radial-kahler",
       "m:int>=2, potential:flat|log|log-inverse, A:double, B:double",
       "U(m)-invariant Kahler chart from a radial potential; potential 'log' "
       "with m=2 is the scalar-flat blow-up model (mass A/3)."},
      {"lebrun",
       "ell:int>=1, expansion:[e_j..] | (count:int, r:double)",
       "Hyperbolic-ansatz family on line-bundle total spaces; closed-form "
       "route only (no numeric chart), use the dedicated subcommand."},
  };
}

namespace detail {

inline Eigen::Vector3d vec3_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(std::string(what) + " must be a 3-vector [x, y, z]");
  return Eigen::Vector3d(j.at(0).get<double>(), j.at(1).get<double>(),
                         j.at(2).get<double>());
}

inline std::vector<Eigen::Vector3d> seeded_centers(int k, std::uint64_t seed,
                                                   double spread) {
  if (k < 1) throw std::invalid_argument("center count must be >= 1");
  if (!(spread > 0.0)) throw std::invalid_argument("spread must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-spread, spread);
  std::vector<Eigen::Vector3d> centers;
  centers.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Eigen::Vector3d p(coord(rng), coord(rng), coord(rng));
    centers.push_back(p);
  }
  return centers;
}

}  // namespace detail

// Build a metric chart from a family name and a JSON parameter object.
// Throws std::invalid_argument for unknown families or malformed
// parameters.  The "lebrun" family has no numeric chart by design (the
// family is evaluated through its closed forms); requesting one produces
// an explanatory error.
inline MetricChart make_chart(const std::string& family, const nlohmann::json& params) {
  if (family == "euclidean") {
    const int n = params.value("n", 3);
    if (n < 3) throw std::invalid_argument("euclidean: n must be >= 3");
    return euclidean_chart(n);
  }
  if (family == "schwarzschild") {
    const int n = params.value("n", 3);
    const double a = params.value("A", 2.0);
    if (n < 3) throw std::invalid_argument("schwarzschild: n must be >= 3");
    return schwarzschild_chart(n, a);
  }
  if (family == "gibbons-hawking") {
    GibbonsHawkingData data;
    if (params.contains("centers")) {
      for (const auto& c : params.at("centers"))
        data.centers.push_back(detail::vec3_from_json(c, "center"));
    } else {
      const int k = params.value("k", 2);
      const auto seed = params.value("seed", std::uint64_t{20240901});
      const double spread = params.value("spread", 1.0);
      data.centers = detail::seeded_centers(k, seed, spread);
    }
    if (params.contains("string_direction"))
      data.string_direction =
          detail::vec3_from_json(params.at("string_direction"), "string_direction")
              .normalized();
    return gibbons_hawking_chart(data);
  }
  if (family == "radial-kahler") {
    const int m = params.value("m", 2);
    const std::string pot = params.value("potential", "log");
    const double a = params.value("A", 1.0);
    const double b = params.value("B", 0.0);
    if (pot == "flat") return radial_kahler_chart(m, radial_potential_flat(), 1e9);
    if (pot == "log") {
      if (m == 2) return burns_type_chart(a);
      return radial_kahler_chart(m, radial_potential_log(a), 2.0,
                                 std::sqrt(std::max(1.0, 4.0 * std::abs(a))));
    }
    if (pot == "log-inverse")
      return radial_kahler_chart(m, radial_potential_log_inverse(a, b), 2.0,
                                 std::sqrt(std::max(2.0, 4.0 * (std::abs(a) + std::abs(b)))));
    throw std::invalid_argument("radial-kahler: unknown potential '" + pot +
                                "' (expected flat | log | log-inverse)");
  }
  if (family == "lebrun") {
    throw std::invalid_argument(
        "the 'lebrun' family is evaluated through closed forms, not a numeric "
        "chart; use the dedicated lebrun subcommand or the closed_form_mass / "
        "mass_oell_* routines");
  }
  throw std::invalid_argument("unknown metric family '" + family +
                              "' (run the family listing for valid names)");
}

}  // namespace alemass
