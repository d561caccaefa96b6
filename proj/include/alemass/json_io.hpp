#pragma once

// JSON (de)serialization of the exchange records and the canonical
// numeric formatting contract: every number emitted in machine-readable
// output is first rounded to 12 significant digits *as a value*, so
// parse -> re-serialize round-trips are byte-identical (nlohmann's
// object storage is key-sorted, and shortest-round-trip printing of an
// already-rounded double is stable).

#include "alemass/admint.hpp"
#include "alemass/homcalc.hpp"
#include "alemass/kahlergeo.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace alemass {

using json = nlohmann::json;

// Round a double to 12 significant decimal digits (value-level).
// Negative zero canonicalizes to +0.
inline double round12(double x) {
  if (x == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// --------------------------------------------------------------------------
// IntersectionData  <->  {"basis": [..], "Q": [[..]], "c1": ["p/q"|int..],
//                         "areas": [..]}

inline IntersectionData intersection_from_json(const json& j) {
  IntersectionData d;
  if (!j.is_object()) throw std::invalid_argument("intersection data must be a JSON object");
  for (const auto& key : {"basis", "Q", "c1", "areas"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("intersection data missing key '") + key + "'");
  d.basis = j.at("basis").get<std::vector<std::string>>();
  d.q = j.at("Q").get<std::vector<std::vector<std::int64_t>>>();
  for (const auto& entry : j.at("c1")) {
    if (entry.is_string())
      d.c1.push_back(parse_rational(entry.get<std::string>()));
    else if (entry.is_number_integer())
      d.c1.push_back(Rational(entry.get<std::int64_t>()));
    else
      throw std::invalid_argument("c1 entries must be integers or 'p/q' strings");
  }
  d.areas = j.at("areas").get<std::vector<double>>();
  d.validate();
  return d;
}

inline json intersection_to_json(const IntersectionData& d) {
  json j;
  j["basis"] = d.basis;
  j["Q"] = d.q;
  json c1 = json::array();
  for (const auto& r : d.c1) c1.push_back(format_rational(r));
  j["c1"] = c1;
  json areas = json::array();
  for (double a : d.areas) areas.push_back(round12(a));
  j["areas"] = areas;
  return j;
}

// --------------------------------------------------------------------------
// DivisorData  <->  {"m": int, "components": [{"label":, "n":, "vol":}..]}

inline DivisorData divisor_from_json(const json& j) {
  DivisorData d;
  if (!j.is_object() || !j.contains("m") || !j.contains("components"))
    throw std::invalid_argument("divisor data must have keys 'm' and 'components'");
  d.m = j.at("m").get<int>();
  for (const auto& c : j.at("components")) {
    DivisorComponent comp;
    comp.label = c.value("label", std::string("D"));
    comp.multiplicity = c.at("n").get<int>();
    comp.volume = c.at("vol").get<double>();
    d.components.push_back(comp);
  }
  return d;
}

inline json divisor_to_json(const DivisorData& d) {
  json j;
  j["m"] = d.m;
  json comps = json::array();
  for (const auto& c : d.components) {
    json cj;
    cj["label"] = c.label;
    cj["n"] = c.multiplicity;
    cj["vol"] = round12(c.volume);
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

// --------------------------------------------------------------------------
// MassEstimate -> JSON / CSV convergence table.

inline json mass_estimate_to_json(const MassEstimate& e) {
  json j;
  j["value"] = round12(e.value);
  j["error_estimate"] = round12(e.error_estimate);
  j["converged"] = e.converged;
  j["method"] = e.method == ExtrapolationMethod::richardson ? "richardson" : "power-fit";
  j["decay_exponent"] = round12(e.decay_exponent);
  json samples = json::array();
  for (std::size_t k = 0; k < e.samples.size(); ++k) {
    json row;
    row["rho"] = round12(e.radii[k]);
    row["mass_at_radius"] = round12(e.samples[k]);
    row["extrapolant"] = round12(e.extrapolants[k]);
    samples.push_back(row);
  }
  j["samples"] = samples;
  return j;
}

inline std::string mass_estimate_to_csv(const MassEstimate& e) {
  std::string out = "rho,mass_at_radius,extrapolant,error_estimate\n";
  char buf[160];
  for (std::size_t k = 0; k < e.samples.size(); ++k) {
    const double running_err =
        k == 0 ? std::abs(e.samples[k] - e.extrapolants[k])
               : std::abs(e.extrapolants[k] - e.extrapolants[k - 1]);
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", e.radii[k], e.samples[k],
                  e.extrapolants[k], running_err);
    out += buf;
  }
  return out;
}

}  // namespace alemass
