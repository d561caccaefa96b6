#pragma once

// Quadrature grids on the unit sphere S^(n-1) for general n >= 2.
//
// Construction: product rule in hyperspherical angles.  Each polar
// angle theta_i carries the weight sin^k(theta_i) d(theta_i); after
// c = cos(theta) this is the Gegenbauer weight (1-c^2)^((k-1)/2), so we
// use Gauss-Jacobi nodes from the Golub-Welsch eigenvalue construction.
// The final azimuthal angle uses the trapezoidal rule, which is exact
// on trigonometric polynomials.  A grid of declared `order` integrates
// every polynomial of total degree <= order exactly (up to roundoff),
// and the weights sum to the exact surface area 2 pi^(n/2) / Gamma(n/2).
//
// Reductions over nodes use deterministic pairwise summation so results
// are identical across runs and independent of any evaluation order.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace alemass {

// Deterministic pairwise sum (stable to ~n^(1/2) fewer roundoff terms
// than naive left-to-right accumulation, and order-independent).
inline double pairwise_sum(const double* data, std::size_t count) {
  if (count == 0) return 0.0;
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += data[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

namespace detail {

struct Rule1D {
  std::vector<double> nodes;    // in (-1, 1)
  std::vector<double> weights;  // sum = integral of the weight function
};

// Gauss rule for the weight (1-x^2)^a on [-1,1] (a = 0 is Legendre).
// Golub-Welsch with the monic Jacobi(a,a) recurrence.
inline Rule1D gauss_gegenbauer(int q, double a) {
  if (q < 1) throw std::invalid_argument("quadrature order must be >= 1");
  // mu0 = int_{-1}^{1} (1-x^2)^a dx = sqrt(pi) Gamma(a+1) / Gamma(a+3/2)
  const double mu0 =
      std::sqrt(std::numbers::pi) * std::tgamma(a + 1.0) / std::tgamma(a + 1.5);
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(q, q);
  for (int n = 1; n < q; ++n) {
    const double nn = static_cast<double>(n);
    const double beta = 4.0 * nn * (nn + a) * (nn + a) * (nn + 2.0 * a) /
                        ((2.0 * nn + 2.0 * a) * (2.0 * nn + 2.0 * a) *
                         (2.0 * nn + 2.0 * a + 1.0) * (2.0 * nn + 2.0 * a - 1.0));
    const double offdiag = std::sqrt(beta);
    jacobi(n, n - 1) = offdiag;
    jacobi(n - 1, n) = offdiag;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  Rule1D rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < q; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace detail

inline double sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

class SphereGrid {
 public:
  // Grid on S^(n-1) exact on polynomials of total degree <= order.
  static SphereGrid product_gauss(int n, int order) {
    if (n < 2) throw std::invalid_argument("sphere dimension requires n >= 2");
    if (order < 1) throw std::invalid_argument("grid order must be >= 1");
    const int q = order / 2 + 1;       // Gauss points per polar level
    const int nphi = 2 * (order / 2) + 4;  // azimuthal points, > order
    SphereGrid grid;
    grid.n_ = n;
    grid.order_ = order;

    // Polar levels i = 1..n-2 with weight sin^(n-1-i); collect rules.
    std::vector<detail::Rule1D> rules;
    for (int i = 1; i <= n - 2; ++i) {
      const int k = n - 1 - i;
      rules.push_back(detail::gauss_gegenbauer(q, (k - 1) / 2.0));
    }

    std::size_t count = 1;
    for (std::size_t lvl = 0; lvl < rules.size(); ++lvl) count *= q;
    count *= nphi;
    grid.nodes_.resize(count, n);
    grid.weights_.resize(count);

    std::vector<int> idx(rules.size(), 0);
    std::size_t row = 0;
    while (true) {
      // Assemble the polar part once per multi-index.
      double wpolar = 1.0;
      std::vector<double> cosv(rules.size()), sinv(rules.size());
      for (std::size_t lvl = 0; lvl < rules.size(); ++lvl) {
        const double c = rules[lvl].nodes[idx[lvl]];
        cosv[lvl] = c;
        sinv[lvl] = std::sqrt(std::max(0.0, 1.0 - c * c));
        wpolar *= rules[lvl].weights[idx[lvl]];
      }
      for (int a = 0; a < nphi; ++a) {
        const double phi = 2.0 * std::numbers::pi * (a + 0.5) / nphi;
        double prod = 1.0;
        for (std::size_t lvl = 0; lvl < rules.size(); ++lvl) {
          grid.nodes_(row, lvl) = prod * cosv[lvl];
          prod *= sinv[lvl];
        }
        grid.nodes_(row, n - 2) = prod * std::cos(phi);
        grid.nodes_(row, n - 1) = prod * std::sin(phi);
        grid.weights_[row] = wpolar * 2.0 * std::numbers::pi / nphi;
        ++row;
      }
      // Advance the polar multi-index.
      std::size_t lvl = 0;
      for (; lvl < rules.size(); ++lvl) {
        if (++idx[lvl] < q) break;
        idx[lvl] = 0;
      }
      if (lvl == rules.size()) break;
      if (rules.empty()) break;
    }
    // n = 2: the loop above runs exactly once with no polar levels.
    return grid;
  }

  int dimension() const { return n_; }
  int order() const { return order_; }
  std::size_t size() const { return weights_.size(); }
  const Eigen::MatrixXd& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  Eigen::VectorXd node(std::size_t i) const { return nodes_.row(i).transpose(); }

  double weight_sum() const { return pairwise_sum(weights_); }

  // Integral over the unit sphere of f (weights already include the
  // full surface measure).  Deterministic pairwise reduction.
  template <typename F>
  double integrate(F&& f) const {
    std::vector<double> terms(size());
    for (std::size_t i = 0; i < size(); ++i)
      terms[i] = weights_[i] * f(Eigen::VectorXd(nodes_.row(i).transpose()));
    return pairwise_sum(terms);
  }

  // Rotated copy (nodes mapped through the orthogonal matrix r).
  SphereGrid rotated(const Eigen::MatrixXd& r) const {
    if (r.rows() != n_ || r.cols() != n_) throw std::invalid_argument("rotation shape mismatch");
    SphereGrid g(*this);
    g.nodes_ = nodes_ * r.transpose();
    return g;
  }

 private:
  int n_ = 0;
  int order_ = 0;
  Eigen::MatrixXd nodes_;
  std::vector<double> weights_;
};

// Exact integral of the monomial prod x_i^(e_i) over S^(n-1):
// zero if any exponent is odd, else 2 prod Gamma(b_i) / Gamma(sum b_i)
// with b_i = (e_i + 1)/2.  Used to validate grid exactness.
inline double monomial_sphere_integral(const std::vector<int>& exponents) {
  double bsum = 0.0;
  double num = 1.0;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e % 2 == 1) return 0.0;
    const double b = (e + 1) / 2.0;
    num *= std::tgamma(b);
    bsum += b;
  }
  return 2.0 * num / std::tgamma(bsum);
}

}  // namespace alemass
