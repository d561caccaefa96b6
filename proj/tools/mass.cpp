// Command-line front end for the ADM mass toolkit.
//
// Subcommands:
//   topo       topological mass from intersection data (JSON input)
//   adm        surface-integral / log-det mass of a chart family
//   lebrun     closed forms for the hyperbolic-ansatz line-bundle family
//   penrose    divisor lower-bound verdict for a given mass
//   families   list the registered chart families
//   reproduce  run the acceptance verification matrix
//
// Exit codes: 0 success, 1 input error, 2 non-converged estimate,
// 3 failed verdict or failed criterion.
//
// Option precedence: command-line flags > config file (--config) >
// built-in defaults.

#include "alemass/alemass.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using alemass::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  json j;
  in >> j;
  return j;
}

void emit(const json& j) { std::fputs(alemass::canonical_dump(j).c_str(), stdout); }

struct AdmArgs {
  std::string family = "schwarzschild";
  std::string params_text = "{}";
  std::string route = "adm";  // adm | logdet
  double rho0 = 16.0;
  int count = 8;
  double ratio = std::numbers::sqrt2;
  int order = 12;
  std::string method = "richardson";
  double tolerance = 1e-6;
  std::optional<double> tail;
  std::string format = "table";
};

int run_adm(const AdmArgs& args) {
  const alemass::MetricChart chart =
      alemass::make_chart(args.family, json::parse(args.params_text));
  const auto schedule = alemass::make_schedule(args.rho0, args.count, args.ratio);

  alemass::AdmOptions opt;
  opt.grid_order = args.order;
  opt.tolerance = args.tolerance;
  opt.method = args.method == "power-fit" ? alemass::ExtrapolationMethod::power_fit
                                          : alemass::ExtrapolationMethod::richardson;
  if (args.tail) opt.tail_exponent = *args.tail;

  const alemass::MassEstimate est = args.route == "logdet"
                                        ? alemass::kahler_logdet_mass(chart, schedule, opt)
                                        : alemass::adm_mass(chart, schedule, opt);

  if (args.format == "json") {
    json j = alemass::mass_estimate_to_json(est);
    j["family"] = args.family;
    j["route"] = args.route;
    emit(j);
  } else if (args.format == "csv") {
    std::fputs(alemass::mass_estimate_to_csv(est).c_str(), stdout);
  } else {
    std::printf("family        %s (%s route)\n", chart.name.c_str(), args.route.c_str());
    std::printf("mass          %.12g\n", est.value);
    std::printf("error est.    %.3g\n", est.error_estimate);
    std::printf("converged     %s\n", est.converged ? "yes" : "no");
    std::printf("tail exponent %.6g\n", est.decay_exponent);
    std::printf("%6s %18s %18s\n", "rho", "mass(rho)", "extrapolant");
    for (std::size_t k = 0; k < est.radii.size(); ++k)
      std::printf("%6.1f %18.12g %18.12g\n", est.radii[k], est.samples[k], est.extrapolants[k]);
  }
  return est.converged ? 0 : 2;
}

int run_topo(const std::string& input, const std::string& format) {
  const alemass::IntersectionData data = alemass::intersection_from_json(load_json_file(input));
  for (const auto& w : data.validate()) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const auto coeffs = alemass::solve_chern_coefficients(data);
  const double mass = alemass::topological_mass_surface(data);
  const auto cert = alemass::minimal_resolution_certificate(data);

  if (format == "json") {
    json j;
    j["mass"] = alemass::round12(mass);
    json cj = json::array();
    for (const auto& c : coeffs) cj.push_back(alemass::format_rational(c));
    j["coefficients"] = cj;
    j["certificate"] = {{"qinv_nonpositive", cert.qinv_entrywise_nonpositive},
                        {"coefficients_nonnegative", cert.coefficients_nonnegative},
                        {"mass_nonpositive", cert.mass_nonpositive},
                        {"ricci_flat_case", cert.is_ricci_flat_case}};
    emit(j);
  } else {
    std::printf("mass  %.12g\n", mass);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      std::printf("a[%s] = %s\n", data.basis[j].c_str(),
                  alemass::format_rational(coeffs[j]).c_str());
    std::printf("certificate: Qinv<=0 %s, a>=0 %s, mass<=0 %s%s\n",
                cert.qinv_entrywise_nonpositive ? "yes" : "no",
                cert.coefficients_nonnegative ? "yes" : "no",
                cert.mass_nonpositive ? "yes" : "no",
                cert.is_ricci_flat_case ? " (Ricci-flat case)" : "");
  }
  return 0;
}

struct LebrunArgs {
  int ell = 3;
  std::vector<double> distances;
  bool zero_instance = false;
  std::string format = "table";
};

int run_lebrun(const LebrunArgs& args) {
  const alemass::LebrunFamily fam = args.zero_instance
                                        ? alemass::zero_mass_instance(args.ell)
                                        : alemass::make_lebrun_family(args.ell, args.distances);
  const alemass::CurveAreas areas = alemass::curve_areas(fam);
  const double mass = alemass::closed_form_mass(fam);
  // Independent route: the same mass from curve areas alone through the
  // intersection-form formula (on-section basis).
  const double topo = alemass::mass_oell_on_section(fam.ell, areas.base_curve, areas.exceptional);

  if (args.format == "json") {
    json j;
    j["ell"] = fam.ell;
    j["mass"] = alemass::round12(mass);
    j["mass_topological"] = alemass::round12(topo);
    j["base_curve_area"] = alemass::round12(areas.base_curve);
    json ex = json::array();
    for (double a : areas.exceptional) ex.push_back(alemass::round12(a));
    j["exceptional_areas"] = ex;
    if (fam.ell >= 3) j["sign_change_radius"] = alemass::round12(alemass::sign_change_radius(fam.ell));
    emit(j);
  } else {
    std::printf("ell              %d\n", fam.ell);
    std::printf("mass             %.12g\n", mass);
    std::printf("cross-check      %.12g (intersection-form route, gap %.3g)\n", topo,
                std::abs(mass - topo));
    std::printf("base curve area  %.12g\n", areas.base_curve);
    for (std::size_t j = 0; j < areas.exceptional.size(); ++j)
      std::printf("area(E%zu)         %.12g\n", j + 1, areas.exceptional[j]);
    if (fam.ell >= 3)
      std::printf("sign change at r %.12g (single-point family)\n",
                  alemass::sign_change_radius(fam.ell));
  }
  return 0;
}

int run_penrose(const std::string& input, double mass, bool scalar_flat, double tolerance,
                const std::string& format) {
  const alemass::DivisorData divisor = alemass::divisor_from_json(load_json_file(input));
  const alemass::PenroseVerdict v = alemass::penrose_check(mass, divisor, scalar_flat, tolerance);
  if (format == "json") {
    json j;
    j["mass"] = alemass::round12(v.mass);
    j["bound"] = alemass::round12(v.bound);
    j["holds"] = v.holds;
    j["equality"] = v.equality;
    j["consistent_with_rigidity"] = v.consistent_with_rigidity;
    j["message"] = v.message;
    emit(j);
  } else {
    std::printf("mass    %.12g\n", v.mass);
    std::printf("bound   %.12g\n", v.bound);
    std::printf("verdict %s\n", v.message.c_str());
  }
  return v.holds ? 0 : 3;
}

int run_families() {
  for (const auto& f : alemass::list_families())
    std::printf("%-16s %s\n                 parameters: %s\n", f.name.c_str(),
                f.description.c_str(), f.parameters.c_str());
  return 0;
}

int run_reproduce(const std::vector<std::string>& only) {
  const auto results = alemass::run_all_checks(only);
  if (results.empty()) {
    std::fprintf(stderr, "no criteria matched the given filters\n");
    return 1;
  }
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%d/9] %s  %-28s (%6.2f s)  %s\n", r.id, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
    if (!r.passed) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failures),
              results.size());
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADM mass toolkit for ALE/AE manifolds"};
  app.require_subcommand(1);
  // --config FILE reads defaults from a TOML/INI file with one section per
  // subcommand (e.g. [adm] rho0=25).  Explicit flags always win over config
  // values.  fallthrough() lets the flag be written after the subcommand.
  app.set_config("--config", "",
                 "Read options from a TOML/INI config file (one section per subcommand)");
  const auto with_config = [](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  // --- topo ---
  auto* topo = with_config(app.add_subcommand("topo", "Topological mass from intersection data"));
  std::string topo_input;
  std::string topo_format = "table";
  topo->add_option("--input", topo_input, "Intersection data JSON file")->required();
  topo->add_option("--format", topo_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  // --- adm ---
  auto* adm = with_config(app.add_subcommand("adm", "Surface-integral or log-det mass of a chart family"));
  AdmArgs adm_args;
  adm->add_option("--family", adm_args.family, "Chart family name (see `families`)");
  adm->add_option("--params", adm_args.params_text, "Family parameters as a JSON object");
  adm->add_option("--route", adm_args.route, "Which mass integral to evaluate")
      ->check(CLI::IsMember({"adm", "logdet"}));
  adm->add_option("--rho0", adm_args.rho0, "First radius of the schedule");
  adm->add_option("--count", adm_args.count, "Number of radii");
  adm->add_option("--ratio", adm_args.ratio, "Geometric ratio between radii");
  adm->add_option("--order", adm_args.order, "Quadrature order");
  adm->add_option("--method", adm_args.method, "Extrapolation method")
      ->check(CLI::IsMember({"richardson", "power-fit"}));
  adm->add_option("--tolerance", adm_args.tolerance, "Convergence tolerance");
  double tail_value = 0.0;
  auto* tail_opt = adm->add_option("--tail", tail_value, "Override the tail exponent p");
  adm->add_option("--format", adm_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // --- lebrun ---
  auto* lebrun = with_config(app.add_subcommand("lebrun", "Closed-form line-bundle family"));
  LebrunArgs lebrun_args;
  lebrun->add_option("--ell", lebrun_args.ell, "Base parameter ell >= 1");
  lebrun->add_option("--distances", lebrun_args.distances,
                     "Hyperbolic distances of the monopole points");
  lebrun->add_flag("--zero-instance", lebrun_args.zero_instance,
                   "Use the distinguished zero-mass configuration");
  lebrun->add_option("--format", lebrun_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  // --- penrose ---
  auto* penrose = with_config(app.add_subcommand("penrose", "Divisor lower-bound verdict"));
  std::string penrose_input;
  double penrose_mass = 0.0;
  bool penrose_scalar_flat = false;
  double penrose_tol = 1e-9;
  std::string penrose_format = "table";
  penrose->add_option("--input", penrose_input, "Divisor data JSON file")->required();
  penrose->add_option("--mass", penrose_mass, "Mass value to test")->required();
  penrose->add_flag("--scalar-flat", penrose_scalar_flat, "The metric is claimed scalar-flat");
  penrose->add_option("--tolerance", penrose_tol, "Equality tolerance");
  penrose->add_option("--format", penrose_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  // --- families / reproduce ---
  with_config(app.add_subcommand("families", "List registered chart families"));
  auto* reproduce =
      with_config(app.add_subcommand("reproduce", "Run the acceptance verification matrix"));
  std::vector<std::string> only;
  reproduce->add_option("--only", only, "Run only criteria whose name or id matches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 1;
  }

  try {
    if (topo->parsed()) return run_topo(topo_input, topo_format);
    if (adm->parsed()) {
      if (tail_opt->count() > 0) adm_args.tail = tail_value;
      return run_adm(adm_args);
    }
    if (lebrun->parsed()) return run_lebrun(lebrun_args);
    if (penrose->parsed())
      return run_penrose(penrose_input, penrose_mass, penrose_scalar_flat, penrose_tol,
                         penrose_format);
    if (app.get_subcommand("families")->parsed()) return run_families();
    if (reproduce->parsed()) return run_reproduce(only);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
