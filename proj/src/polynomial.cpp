#include "trieig/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace trieig {

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int UniPoly::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (coeffs[k] != 0.0) return k;
  }
  return -1;
}

PolyRoots polynomial_roots(const UniPoly& p, double imag_tol, double cluster_tol) {
  PolyRoots out;
  std::vector<double> c = p.coeffs;
  double biggest = 0.0;
  for (double v : c) biggest = std::max(biggest, std::abs(v));
  if (biggest == 0.0) return out;
  while (!c.empty() && std::abs(c.back()) <= 1e-13 * biggest) c.pop_back();

  std::vector<double> real;
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
  real.insert(real.end(), zeros, 0.0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));

  const int n = static_cast<int>(c.size()) - 1;
  if (n >= 1) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) companion(0, k) = -c[n - 1 - k] / c[n];
    for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    for (const std::complex<double>& z : es.eigenvalues()) {
      if (std::abs(z.imag()) < imag_tol) {
        real.push_back(z.real());
      } else if (z.imag() > 0.0) {
        out.complex.push_back(z);
        out.complex.push_back(std::conj(z));
      }
    }
  }

  std::sort(real.begin(), real.end());
  for (double r : real) {
    if (!out.real.empty() && std::abs(out.real.back().value - r) < cluster_tol) {
      RealRoot& last = out.real.back();
      last.value = (last.value * last.multiplicity + r) / (last.multiplicity + 1);
      ++last.multiplicity;
    } else {
      out.real.push_back({r, 1});
    }
  }
  return out;
}

BivariatePoly::BivariatePoly(RegionCoordinates vars, std::vector<Monomial> support,
                             std::vector<double> coeffs)
    : vars_(vars), support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (support_.size() != coeffs_.size()) {
    throw std::invalid_argument("BivariatePoly: support and coefficient sizes differ");
  }
}

double BivariatePoly::coeff(int i, int j) const {
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (support_[k].i == i && support_[k].j == j) return coeffs_[k];
  }
  return 0.0;
}

int BivariatePoly::total_degree() const {
  int d = -1;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (coeffs_[k] != 0.0) d = std::max(d, support_[k].i + support_[k].j);
  }
  return d;
}

int BivariatePoly::degree_in_first() const {
  int d = -1;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (coeffs_[k] != 0.0) d = std::max(d, support_[k].i);
  }
  return d;
}

int BivariatePoly::degree_in_second() const {
  int d = -1;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (coeffs_[k] != 0.0) d = std::max(d, support_[k].j);
  }
  return d;
}

double BivariatePoly::operator()(double x, double y) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    acc += coeffs_[k] * std::pow(x, support_[k].i) * std::pow(y, support_[k].j);
  }
  return acc;
}

Point BivariatePoly::gradient(double x, double y) const {
  Point g;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    const auto [i, j] = support_[k];
    if (i > 0) g.x += coeffs_[k] * i * std::pow(x, i - 1) * std::pow(y, j);
    if (j > 0) g.y += coeffs_[k] * j * std::pow(x, i) * std::pow(y, j - 1);
  }
  return g;
}

std::array<double, 3> BivariatePoly::hessian(double x, double y) const {
  std::array<double, 3> h{0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < support_.size(); ++k) {
    const auto [i, j] = support_[k];
    const double c = coeffs_[k];
    if (i > 1) h[0] += c * i * (i - 1) * std::pow(x, i - 2) * std::pow(y, j);
    if (i > 0 && j > 0) h[1] += c * i * j * std::pow(x, i - 1) * std::pow(y, j - 1);
    if (j > 1) h[2] += c * j * (j - 1) * std::pow(x, i) * std::pow(y, j - 2);
  }
  return h;
}

namespace {

std::vector<double> poly_mul(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> r(p.size() + q.size() - 1, 0.0);
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) r[a + b] += p[a] * q[b];
  }
  return r;
}

std::vector<double> poly_pow(const std::vector<double>& p, int n) {
  std::vector<double> r{1.0};
  for (int k = 0; k < n; ++k) r = poly_mul(r, p);
  return r;
}

}  // namespace

UniPoly BivariatePoly::restrict_to_line(Point origin, Point direction) const {
  UniPoly out;
  const std::vector<double> xl{origin.x, direction.x};
  const std::vector<double> yl{origin.y, direction.y};
  for (std::size_t k = 0; k < support_.size(); ++k) {
    const std::vector<double> term = poly_mul(poly_pow(xl, support_[k].i), poly_pow(yl, support_[k].j));
    if (out.coeffs.size() < term.size()) out.coeffs.resize(term.size(), 0.0);
    for (std::size_t d = 0; d < term.size(); ++d) out.coeffs[d] += coeffs_[k] * term[d];
  }
  return out;
}

BivariatePoly BivariatePoly::scaled(double factor) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= factor;
  return BivariatePoly(vars_, support_, std::move(c));
}

}  // namespace trieig
