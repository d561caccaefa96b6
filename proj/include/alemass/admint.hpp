#pragma once

// ADM mass by numerical surface integration and radius extrapolation,
// plus the Kähler log-det shortcut valid in holomorphic coordinates.
//
// Coordinate ADM route: at each radius rho,
//   mass(rho) = C_n / |Gamma| * int_{S_rho} (g_kl,k - g_kk,l) nu^l dA_E,
//   C_n = Gamma(n/2) / (4 (n-1) pi^(n/2)),
// and mass(rho) -> ADM mass like rho^-p with p = 2 (tau - (n-2)/2) for
// a chart of fall-off tau.  The samples are extrapolated to rho = inf.
//
// Kähler log-det route (complex dimension m, holomorphic asymptotic
// coordinates): the same limit equals
//   -( (m-1)! / (4 (2m-1) pi^m) ) / |Gamma| * int_{S_rho} d/dnu log sqrt(det g) dA_E.
//
// Node evaluations are independent (evaluators must be pure), and all
// reductions use deterministic pairwise summation, so results do not
// depend on evaluation order.

#include "alemass/metrics.hpp"
#include "alemass/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alemass {

// Normalization constant C_n of the ADM surface integral.
inline double adm_normalization(int n) {
  if (n < 3) throw std::invalid_argument("ADM mass requires n >= 3");
  return std::tgamma(n / 2.0) /
         (4.0 * (n - 1.0) * std::pow(std::numbers::pi, n / 2.0));
}

// Convention-drift test hooks.  Production code always uses the
// defaults; the acceptance suite flips them to confirm the pipelines
// are actually sensitive to the normalization sign and to the 1/|Gamma|
// quotient factor (criteria would silently drift otherwise).
struct MassConventions {
  double normalization_sign = 1.0;
  bool use_gamma_quotient = true;
};

// Euclidean-normalized ADM integrand  (g_kl,k - g_kk,l) nu^l  at x.
inline double adm_integrand(const MetricChart& chart, const Eigen::VectorXd& x) {
  const int n = chart.n;
  const auto dg = chart.dg(x);
  const Eigen::VectorXd nu = x.normalized();
  double value = 0.0;
  for (int l = 0; l < n; ++l) {
    double div_term = 0.0, trace_term = 0.0;
    for (int k = 0; k < n; ++k) {
      div_term += dg[k](k, l);
      trace_term += dg[l](k, k);
    }
    value += (div_term - trace_term) * nu(l);
  }
  return value;
}

// Normal derivative of log sqrt(det g) at x:  (1/2) nu^l tr(g^-1 dg_l).
inline double logdet_normal_derivative(const MetricChart& chart, const Eigen::VectorXd& x) {
  const auto g = chart.g(x);
  const auto dg = chart.dg(x);
  const Eigen::VectorXd nu = x.normalized();
  const Eigen::MatrixXd ginv = g.inverse();
  double value = 0.0;
  for (int l = 0; l < chart.n; ++l) value += nu(l) * (ginv * dg[l]).trace();
  return 0.5 * value;
}

namespace detail {

template <typename Integrand>
double surface_average(const MetricChart& chart, double rho, const SphereGrid& grid,
                       Integrand&& f) {
  if (grid.dimension() != chart.n)
    throw std::invalid_argument("quadrature grid dimension does not match chart");
  if (rho <= chart.inner_radius)
    throw ChartDomainError("integration sphere inside chart inner radius");
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    terms[i] = grid.weights()[i] * f(Eigen::VectorXd(rho * grid.node(i)));
  return pairwise_sum(terms);
}

}  // namespace detail

// Finite-radius ADM surface integral (full normalization, including the
// 1/|Gamma| quotient factor).
inline double mass_at_radius(const MetricChart& chart, double rho, const SphereGrid& grid,
                             const MassConventions& conv = {}) {
  const double cn = conv.normalization_sign * adm_normalization(chart.n);
  const double quot = conv.use_gamma_quotient ? 1.0 / chart.gamma_order : 1.0;
  const double integral = detail::surface_average(
      chart, rho, grid, [&](const Eigen::VectorXd& x) { return adm_integrand(chart, x); });
  return cn * quot * std::pow(rho, chart.n - 1) * integral;
}

// Finite-radius Kähler log-det mass integral.  Only meaningful for
// charts flagged as Kähler in holomorphic asymptotic coordinates.
inline double logdet_mass_at_radius(const MetricChart& chart, double rho, const SphereGrid& grid,
                                    const MassConventions& conv = {}) {
  if (!chart.kahler_holomorphic)
    throw std::invalid_argument(
        "log-det mass requires a chart flagged Kähler in holomorphic coordinates");
  const int m = chart.complex_dim;
  const double coeff = -std::tgamma(static_cast<double>(m)) /
                       (4.0 * (2.0 * m - 1.0) * std::pow(std::numbers::pi, m));
  const double quot = conv.use_gamma_quotient ? 1.0 / chart.gamma_order : 1.0;
  const double integral = detail::surface_average(
      chart, rho, grid,
      [&](const Eigen::VectorXd& x) { return logdet_normal_derivative(chart, x); });
  return conv.normalization_sign * coeff * quot * std::pow(rho, chart.n - 1) * integral;
}

// ---------------------------------------------------------------------------
// Radius schedules and power-law extrapolation.

// Geometric schedule rho_k = rho0 * ratio^k (default 8 radii, ratio sqrt 2).
inline std::vector<double> make_schedule(double rho0, int count = 8,
                                         double ratio = std::numbers::sqrt2) {
  if (count < 3) throw std::invalid_argument("schedule needs at least 3 radii");
  if (rho0 <= 0 || ratio <= 1) throw std::invalid_argument("schedule must be increasing");
  std::vector<double> s(count);
  double r = rho0;
  for (int k = 0; k < count; ++k, r *= ratio) s[k] = r;
  return s;
}

enum class ExtrapolationMethod { richardson, power_fit };

struct MassEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  ExtrapolationMethod method = ExtrapolationMethod::richardson;
  double decay_exponent = 0.0;              // p used for the tail model
  std::vector<double> radii;
  std::vector<double> samples;              // mass(rho_k)
  std::vector<double> extrapolants;         // running extrapolant after k+1 samples
};

namespace detail {

struct TableauResult {
  double value;
  double error;
};

// Polynomial extrapolation to t = 0 in the variable t = rho^-p
// (Neville tableau; equivalent to iterated Richardson with the error
// ladder p, 2p, 3p, ... on geometric schedules, and valid for any
// increasing schedule).  Returns the tableau entry with the smallest
// internal-consistency error estimate.
inline TableauResult neville_best(const std::vector<double>& t, const std::vector<double>& m) {
  const std::size_t k = t.size();
  std::vector<std::vector<double>> tab(k);
  for (std::size_t i = 0; i < k; ++i) tab[i] = {m[i]};
  TableauResult best{m.back(), std::numeric_limits<double>::infinity()};
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      const double ta = t[i - j], tb = t[i];
      const double v = (ta * tab[i][j - 1] - tb * tab[i - 1][j - 1]) / (ta - tb);
      tab[i].push_back(v);
      const double err = std::abs(v - tab[i][j - 1]) + std::abs(v - tab[i - 1][j - 1]);
      if (err <= best.error) best = {v, err};
    }
  }
  if (k == 1) best = {m[0], std::numeric_limits<double>::infinity()};
  return best;
}

inline TableauResult power_fit(const std::vector<double>& t, const std::vector<double>& m) {
  // Least squares for m = c0 + c1 t.
  auto fit = [](const std::vector<double>& tt, const std::vector<double>& mm) {
    const std::size_t k = tt.size();
    double st = 0, sm = 0, stt = 0, stm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      st += tt[i];
      sm += mm[i];
      stt += tt[i] * tt[i];
      stm += tt[i] * mm[i];
    }
    const double denom = k * stt - st * st;
    const double c1 = (k * stm - st * sm) / denom;
    const double c0 = (sm - c1 * st) / k;
    return std::pair<double, double>{c0, c1};
  };
  const auto [c0, c1] = fit(t, m);
  double rss = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = m[i] - c0 - c1 * t[i];
    rss += r * r;
  }
  double drop_diff = 0.0;
  if (t.size() >= 5) {
    const std::vector<double> t2(t.begin() + 2, t.end());
    const std::vector<double> m2(m.begin() + 2, m.end());
    drop_diff = std::abs(fit(t2, m2).first - c0);
  }
  return {c0, drop_diff + std::sqrt(rss / t.size())};
}

}  // namespace detail

struct ExtrapolationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::vector<double> extrapolants;
};

inline ExtrapolationResult extrapolate_power_law(const std::vector<double>& radii,
                                                 const std::vector<double>& samples, double p,
                                                 ExtrapolationMethod method) {
  if (radii.size() != samples.size() || radii.size() < 2)
    throw std::invalid_argument("extrapolation needs matching radii/samples, length >= 2");
  if (p <= 0) throw std::invalid_argument("tail exponent p must be positive");
  std::vector<double> t(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) t[i] = std::pow(radii[i], -p);
  ExtrapolationResult res;
  res.extrapolants.resize(radii.size());
  res.extrapolants[0] = samples[0];
  for (std::size_t k = 2; k <= radii.size(); ++k) {
    const std::vector<double> tk(t.begin(), t.begin() + k);
    const std::vector<double> mk(samples.begin(), samples.begin() + k);
    const detail::TableauResult r = method == ExtrapolationMethod::richardson
                                        ? detail::neville_best(tk, mk)
                                        : detail::power_fit(tk, mk);
    res.extrapolants[k - 1] = r.value;
    if (k == radii.size()) {
      res.value = r.value;
      res.error_estimate = r.error;
    }
  }
  // Floor the error estimate at a few ulps of the value.
  res.error_estimate = std::max(res.error_estimate,
                                1e-15 * (1.0 + std::abs(res.value)));
  return res;
}

// Estimate of the tail exponent p from consecutive sample differences
// on a geometric schedule (median of the per-triple estimates).
inline double fit_decay_exponent(const std::vector<double>& radii,
                                 const std::vector<double>& samples) {
  if (radii.size() != samples.size() || radii.size() < 3)
    throw std::invalid_argument("exponent fit needs at least 3 samples");
  std::vector<double> est;
  for (std::size_t k = 0; k + 2 < radii.size(); ++k) {
    const double d0 = samples[k + 1] - samples[k];
    const double d1 = samples[k + 2] - samples[k + 1];
    const double ratio = radii[k + 1] / radii[k];
    if (d0 == 0.0 || d1 == 0.0 || d0 * d1 < 0) continue;
    est.push_back(std::log(std::abs(d0 / d1)) / std::log(ratio));
  }
  if (est.empty()) throw std::domain_error("samples show no usable power-law tail");
  std::sort(est.begin(), est.end());
  return est[est.size() / 2];
}

// ---------------------------------------------------------------------------
// Grid selection: rotate product grids away from excluded directions
// (Dirac strings of gauge potentials).  Deterministic scan over a
// fixed family of orthogonal matrices; never silently accepts nodes
// inside the excluded region.

namespace detail {

inline Eigen::MatrixXd givens_family_rotation(int n, double alpha) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  int pair_index = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pair_index) {
      const double a = alpha * std::numbers::phi * pair_index;
      Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
      g(i, i) = std::cos(a);
      g(j, j) = std::cos(a);
      g(i, j) = -std::sin(a);
      g(j, i) = std::sin(a);
      r = g * r;
    }
  return r;
}

}  // namespace detail

// Grid whose nodes are admissible for the chart at every radius of the
// schedule.  Charts without exclusions get the unrotated grid.
inline SphereGrid admissible_grid(const MetricChart& chart, int order,
                                  const std::vector<double>& schedule) {
  SphereGrid grid = SphereGrid::product_gauss(chart.n, order);
  if (!chart.is_admissible) return grid;
  auto all_ok = [&](const SphereGrid& g) {
    for (double rho : schedule)
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!chart.is_admissible(Eigen::VectorXd(rho * g.node(i)))) return false;
    return true;
  };
  for (int step = 0; step < 64; ++step) {
    const SphereGrid cand =
        step == 0 ? grid : grid.rotated(detail::givens_family_rotation(chart.n, 0.05 * step));
    if (all_ok(cand)) return cand;
  }
  throw ChartDomainError("no grid rotation avoids the chart's excluded directions");
}

// ---------------------------------------------------------------------------
// Top-level drivers.

struct AdmOptions {
  int grid_order = 12;
  ExtrapolationMethod method = ExtrapolationMethod::richardson;
  double tolerance = 1e-6;               // convergence: last two extrapolants
  std::optional<double> tail_exponent;   // override for p (default 2 tau - (n-2))
  MassConventions conventions;
};

inline double default_tail_exponent(const MetricChart& chart) {
  const double eps = chart.declared_tau - (chart.n - 2) / 2.0;
  if (eps <= 0)
    throw std::invalid_argument("chart fall-off tau too weak for a defined mass");
  return std::min(2.0 * eps, 1e6);
}

namespace detail {

inline void validate_schedule(const MetricChart& chart, const std::vector<double>& schedule) {
  if (schedule.size() < 3) throw std::invalid_argument("schedule needs at least 3 radii");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= chart.inner_radius)
      throw std::invalid_argument("schedule radius inside chart inner radius");
    if (i > 0 && schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("schedule must be strictly increasing");
  }
}

template <typename SampleFn>
MassEstimate run_mass_pipeline(const MetricChart& chart, const std::vector<double>& schedule,
                               const AdmOptions& opt, SampleFn&& sample) {
  validate_schedule(chart, schedule);
  const SphereGrid grid = admissible_grid(chart, opt.grid_order, schedule);
  MassEstimate est;
  est.method = opt.method;
  est.decay_exponent = opt.tail_exponent.value_or(default_tail_exponent(chart));
  est.radii = schedule;
  est.samples.resize(schedule.size());
  for (std::size_t k = 0; k < schedule.size(); ++k)
    est.samples[k] = sample(schedule[k], grid);
  const ExtrapolationResult ex =
      extrapolate_power_law(est.radii, est.samples, est.decay_exponent, opt.method);
  est.value = ex.value;
  est.error_estimate = ex.error_estimate;
  est.extrapolants = ex.extrapolants;
  const std::size_t k = est.extrapolants.size();
  est.converged =
      k >= 2 && std::abs(est.extrapolants[k - 1] - est.extrapolants[k - 2]) < opt.tolerance;
  return est;
}

}  // namespace detail

// ADM mass of the chart by quadrature + extrapolation.  Non-convergence
// is reported through `converged = false`, never as an exception.
inline MassEstimate adm_mass(const MetricChart& chart, const std::vector<double>& schedule,
                             const AdmOptions& opt = {}) {
  return detail::run_mass_pipeline(chart, schedule, opt, [&](double rho, const SphereGrid& g) {
    return mass_at_radius(chart, rho, g, opt.conventions);
  });
}

// Kähler log-det mass (second route to the same number on charts in
// holomorphic asymptotic coordinates).
inline MassEstimate kahler_logdet_mass(const MetricChart& chart,
                                       const std::vector<double>& schedule,
                                       const AdmOptions& opt = {}) {
  if (!chart.kahler_holomorphic)
    throw std::invalid_argument(
        "log-det mass requires a chart flagged Kähler in holomorphic coordinates");
  return detail::run_mass_pipeline(chart, schedule, opt, [&](double rho, const SphereGrid& g) {
    return logdet_mass_at_radius(chart, rho, g, opt.conventions);
  });
}

}  // namespace alemass
